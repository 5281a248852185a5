#ifndef POWERSUM_JSON_IO_HPP
#define POWERSUM_JSON_IO_HPP

#include <string_view>

#include "json.hpp"
#include "powersum/conjecture_lab.hpp"
#include "powersum/poly.hpp"
#include "powersum/sequences.hpp"
#include "powersum/sum_engine.hpp"

namespace powersum {

// Insertion-ordered documents keep report output byte-stable.
using Json = nlohmann::ordered_json;

Json poly_json(const UniPoly& p, std::string_view var);
Json rational_coefficient_json(const RationalCoefficient& c);
Json xpolynomial_json(const XPolynomial& p);
Json conjecture1_json(const Conjecture1Report& r);
Json violation_json(const ConjectureViolation& v);
Json recovered_json(const RecoveredP& p);
Json structure_json(const StructureReport& r);
Json venn_json(const VennFactorization& v);
Json genocchi_eval_json(const GenocchiEvalReport& r);
Json conjecture43_json(const Conjecture43Report& r);

}  // namespace powersum

#endif
