#include "thue/certtable.hpp"

#include <fstream>
#include <sstream>

#include "thue/errors.hpp"
#include "thue/hypergeom.hpp"

namespace thue {

Rat parse_decimal(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    std::string intpart, fracpart;
    bool dot = false, any_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (dot) throw Error(ErrorCode::InvalidInput, "malformed decimal: " + s);
            dot = true;
            continue;
        }
        if (c < '0' || c > '9') throw Error(ErrorCode::InvalidInput, "malformed decimal: " + s);
        (dot ? fracpart : intpart) += c;
        any_digit = true;
    }
    if (!any_digit) throw Error(ErrorCode::InvalidInput, "malformed decimal: " + s);
    Int num(intpart.empty() ? std::string("0") : intpart);
    for (char c : fracpart) num = num * 10 + (c - '0');
    Rat out(num, int_pow(Int(10), fracpart.size()));
    out.canonicalize();
    if (neg) out = -out;
    return out;
}

CertTable load_cert_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open certificate table: " + path);
    CertTable table;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        long n;
        std::string c1, l1, l2;
        if (!(ss >> n >> c1 >> l1 >> l2))
            throw Error(ErrorCode::InvalidInput,
                        "malformed table row at " + path + ":" + std::to_string(lineno));
        CertRow row;
        row.n = n;
        row.C1 = parse_decimal(c1);
        row.logD1 = parse_decimal(l1);
        row.logD2 = parse_decimal(l2);
        table[n] = row;
    }
    return table;
}

std::string cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::Table1: return "table1";
        case CertKind::Table2: return "table2";
        case CertKind::DefaultNMu: return "default_n_mu";
        case CertKind::DefaultNLog: return "default_n_log";
    }
    return "?";
}

Real Certificate::C_up(long prec) const { return Real::of(C, prec, MPFR_RNDU); }

Real Certificate::D_up(long prec) const {
    switch (kind) {
        case CertKind::Table1:
        case CertKind::Table2:
            return Real::exp(Real::of(logD, prec, MPFR_RNDU), MPFR_RNDU);
        case CertKind::DefaultNMu:
            return D_exact.value(prec, MPFR_RNDU);
        case CertKind::DefaultNLog: {
            // 1.18 * n * log n, all factors positive, rounded up throughout.
            Real ln = Real::log(Real::of(Int(n), prec, MPFR_RNDU), MPFR_RNDU);
            return Real::mul_q(ln, Rat(Int(59) * Int(n), Int(50)), MPFR_RNDU);
        }
    }
    throw Error(ErrorCode::InvalidInput, "unknown certificate kind");
}

Real Certificate::logD_up(long prec) const {
    switch (kind) {
        case CertKind::Table1:
        case CertKind::Table2:
            return Real::of(logD, prec, MPFR_RNDU);
        default:
            // log of an upper bound, rounded up, is an upper bound on log D.
            return Real::log(D_up(prec), MPFR_RNDU);
    }
}

std::string Certificate::describe() const {
    std::ostringstream out;
    out << cert_kind_name(kind) << "(n=" << n;
    switch (kind) {
        case CertKind::Table1:
        case CertKind::Table2:
            out << ", C=" << C.get_str() << ", logD=" << logD.get_str();
            break;
        case CertKind::DefaultNMu:
            out << ", C=1, D=" << D_exact.str();
            break;
        case CertKind::DefaultNLog:
            out << ", C=1, D=1.18*n*log(n)";
            break;
    }
    out << ")";
    return out.str();
}

Certificate resolve_certificate(long n, const Int& d, CertKind kind, const CertTable& table) {
    if (n < 3) throw Error(ErrorCode::InvalidParameters, "certificates require n >= 3");
    Certificate cert;
    cert.n = n;
    cert.kind = kind;
    switch (kind) {
        case CertKind::Table1:
        case CertKind::Table2: {
            auto it = table.find(n);
            if (it == table.end())
                throw Error(ErrorCode::NotApplicable,
                            "no table row for n = " + std::to_string(n));
            if (kind == CertKind::Table1) {
                cert.C = it->second.C1;
                cert.logD = it->second.logD1;
            } else {
                cert.C = Rat(100);
                cert.logD = it->second.logD2;
            }
            break;
        }
        case CertKind::DefaultNMu:
        case CertKind::DefaultNLog: {
            if (!cal_N_divides_n(d, n))
                throw Error(ErrorCode::NotApplicable,
                            "default certificate requires cal_N(d,n) | n (d = " + d.get_str() + ")");
            if (kind == CertKind::DefaultNLog && n == 6)
                throw Error(ErrorCode::NotApplicable, "the 1.18 n log n default excludes n = 6");
            cert.C = Rat(1);
            if (kind == CertKind::DefaultNMu) {
                PrimePowerProduct nf;
                for (const auto& [p, e] : factor(Int(n))) nf.multiply_by(p, Rat(e));
                cert.D_exact = nf * mu_n(n);
            }
            break;
        }
    }
    return cert;
}

} // namespace thue
