#ifndef THUE_CERTTABLE_HPP
#define THUE_CERTTABLE_HPP

#include <map>
#include <string>

#include "thue/prime_power.hpp"
#include "thue/rational.hpp"
#include "thue/real.hpp"

namespace thue {

// One row of the bundled denominator-growth table: for index n, the candidate
// constant pairs (C1, exp(logD1)) and (100, exp(logD2)) believed to satisfy
// the growth inequality checked by verify_denominator_inequality.
struct CertRow {
    long n = 0;
    Rat C1;     // exact (the file stores exact decimals)
    Rat logD1;  // exact decimal, natural log of the growth base
    Rat logD2;
};

using CertTable = std::map<long, CertRow>;

// Exact decimal-string parsing ("2.46", "-0.5", "1e3" not supported — plain
// fixed-point only, optionally signed).  Shared by the table loader and CLI.
Rat parse_decimal(const std::string& s);

// Load the bundled `n C1 logD1 logD2` file ('#' comment lines skipped).
CertTable load_cert_table(const std::string& path);

enum class CertKind { Table1, Table2, DefaultNMu, DefaultNLog };

std::string cert_kind_name(CertKind k);

// A resolved (C_n, D_n) pair for use in the measure formulas.  Only upper
// bounds of C and D are ever needed: E divides by D (so an upper bound on D
// keeps E conservative/low), Q multiplies by D (upper bound keeps Q
// conservative/high), and c multiplies by C.
struct Certificate {
    long n = 0;
    CertKind kind = CertKind::Table1;
    Rat C;      // exact: table C1, 100, or 1
    Rat logD;   // exact decimal (table kinds only)
    PrimePowerProduct D_exact;  // DefaultNMu: n * mu_n

    Real C_up(long prec) const;
    Real D_up(long prec) const;     // upper bound on D_n
    Real logD_up(long prec) const;  // upper bound on log D_n (for reporting)
    std::string describe() const;
};

// Resolve a certificate for (n, d).
//   Table1 / Table2: row n must exist in the table (throws NotApplicable
//     otherwise; the table only covers specific n).
//   DefaultNMu: requires n >= 3 and cal_N(d,n) | n; C = 1, D = n*mu_n.
//   DefaultNLog: requires additionally n != 6; C = 1, D = 1.18*n*log n.
Certificate resolve_certificate(long n, const Int& d, CertKind kind, const CertTable& table);

} // namespace thue

#endif
