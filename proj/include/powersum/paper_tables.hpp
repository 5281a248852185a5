#ifndef POWERSUM_PAPER_TABLES_HPP
#define POWERSUM_PAPER_TABLES_HPP

#include <map>
#include <optional>
#include <vector>

#include "powersum/exact.hpp"
#include "powersum/poly.hpp"

namespace powersum::paper_tables {

/// Per-entry status of the checked-in comparison tables. Three displays
/// are internally inconsistent; for those the table carries both the
/// literal text and the derived replacement, and comparisons downgrade a
/// mismatch against the literal side to a warning when the derived side
/// matches.
enum class FixtureStatus { kMatch, kSuspectedTypo };

inline constexpr unsigned kTuenterListMax = 7;
/// Tuenter polynomials P_0..P_7 as printed.
UniPoly tuenter_printed(unsigned k);

inline constexpr unsigned kPListMax = 7;
/// P_k(t,x) for k = 0..7 as printed (every coefficient is literally given
/// in the alpha basis: [x^{k-j}] = (-1)^j (sum_q alpha t^{2q}(t+1)^{j-3q})/t^j).
XPolynomial p_printed(unsigned k);
/// The printed alpha row for coefficient j of P_k (j = 0 holds {k!}).
std::vector<ExactRational> alpha_printed(unsigned k, unsigned j);

inline constexpr unsigned kFaulhaberListMax = 7;
/// The Faulhaber polynomial list: S_{k,1}(n) as a polynomial in t.
/// k = 6 (one inner coefficient) and k = 7 (a doubled t^2 prefactor) are
/// flagged; `derived` carries the replacement backed by the sum oracle.
struct FaulhaberFixture {
    unsigned k = 0;
    UniPoly printed;
    std::optional<UniPoly> derived;
    FixtureStatus status = FixtureStatus::kMatch;
};
const FaulhaberFixture& faulhaber_printed(unsigned k);

inline constexpr unsigned kBracketListMax = 7;
/// The general displays S_{k,j}(n) = (t^pre / divisor) * bracket(j; t)
/// * (j^weight/(j-1)!) * prod_{q=1}^{j-1}(jn+q). Brackets are stored per
/// t-power (ascending) as integer polynomials in j. The k = 6 t^2 bracket
/// is flagged and carries a derived override.
struct BracketFixture {
    unsigned k = 0;
    long divisor = 1;
    unsigned t_prefactor = 2;
    unsigned j_weight = 2;
    std::vector<UniPoly> printed;                 // index = t-power, UniPoly in j
    std::map<unsigned, UniPoly> derived_override;  // t-power -> replacement
    FixtureStatus status = FixtureStatus::kMatch;
};
const BracketFixture& bracket_printed(unsigned k);

}  // namespace powersum::paper_tables

#endif
