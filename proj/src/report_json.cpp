#include "mproj/report_json.hpp"

#include <cstdint>
#include <limits>

namespace mproj {

using json = nlohmann::ordered_json;

json big_to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

json to_json(const RelationCheck& r)
{
    return {{"relation", r.relation},
            {"pass", r.pass},
            {"max_abs_discrepancy_numerator", big_to_json(r.max_abs_discrepancy_numerator)}};
}

json to_json(const BracketReport& r)
{
    json arr = json::array();
    for (const auto& rel : r.relations)
        arr.push_back(to_json(rel));
    return arr;
}

json to_json(const ClassificationVerdict& v)
{
    json j = {{"verdict", to_string(v.verdict)},
              {"reason", to_string(v.reason)},
              {"n1", v.partition1.n()},
              {"n2", v.partition2.n()},
              {"partition1", to_string(v.partition1)},
              {"partition2", to_string(v.partition2)}};
    if (v.evidence) {
        j["character1"] = to_string(v.evidence->character1);
        j["character2"] = to_string(v.evidence->character2);
        j["factorization1"] = to_string(v.evidence->factorization1);
        j["factorization2"] = to_string(v.evidence->factorization2);
    } else {
        j["character1"] = nullptr;
        j["character2"] = nullptr;
        j["factorization1"] = nullptr;
        j["factorization2"] = nullptr;
    }
    return j;
}

json to_json(const PoincarePolynomial& p)
{
    json betti = json::array();
    for (const auto& b : p.betti())
        betti.push_back(big_to_json(b));
    return {{"n", p.half_dimension()},
            {"betti", betti},
            {"poincare", to_string(p)},
            {"sum", big_to_json(p.total())}};
}

json to_json(const DimComparison& c)
{
    return {{"g", c.genus},
            {"n", c.n},
            {"total_dim_cohomology", big_to_json(c.cohomology_dim)},
            {"dim_sym_of_cohomology", big_to_json(c.sym_dim)},
            {"relation", to_string(c.relation)}};
}

}  // namespace mproj
