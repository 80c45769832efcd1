#pragma once

#include "wblocks/algebra/laurent.hpp"
#include "wblocks/algebra/multipoly.hpp"
#include "wblocks/characters/comp_char.hpp"
#include "wblocks/characters/weights.hpp"
#include "wblocks/combinat/block_key.hpp"
#include "wblocks/combinat/composition.hpp"
#include "wblocks/combinat/tableau.hpp"
#include "wblocks/error.hpp"
#include "wblocks/qcanon/tensor.hpp"

#include <json.hpp>

#include <string>

namespace wblocks::cli {

using Json = nlohmann::ordered_json;

// Malformed user input; reported with exit code 1.
class UsageError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// "o:p0,p1,...", "0" (empty), or "offset=o;parts=p0,p1,..."
Composition parse_composition(const std::string& s);
// "mu=<comp>;nu=<comp>;t=<t>" with short-form compositions
BlockKey parse_block(const std::string& s);
// "lo..hi"
Window parse_window(const std::string& s);
// "a1,a2;b1,b2,b3" as a pair of rows
std::pair<std::vector<int>, std::vector<int>> parse_rows(const std::string& s);

Json to_json(const Composition& c);
// exponent -> decimal string, ascending exponents
Json coeff_map(const Laurent& f);
// {"coeffs": {...}}
Json to_json(const Laurent& f);
Json to_json(const BlockKey& xi);
Json to_json(const Tableau& a);
Json to_json(const MultiPoly& f);
Json to_json(const CompChar& c);
Json to_json(const WeightChar& c);
// terms sorted by key, descending
Json terms_json(const TensorVec& v);
Json to_json(const TensorVec& v);
Laurent laurent_from_json(const Json& j);

} // namespace wblocks::cli
