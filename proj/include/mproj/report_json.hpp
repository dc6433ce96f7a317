#ifndef MPROJ_REPORT_JSON_HPP
#define MPROJ_REPORT_JSON_HPP

// JSON documents emitted by the command-line tool. Big integers become JSON
// numbers when they fit in 64 bits and decimal strings otherwise.

#include <json.hpp>

#include "mproj/classifier.hpp"
#include "mproj/lefschetz.hpp"
#include "mproj/symcurve.hpp"

namespace mproj {

nlohmann::ordered_json big_to_json(const BigInt& v);

nlohmann::ordered_json to_json(const RelationCheck& r);
nlohmann::ordered_json to_json(const BracketReport& r);
nlohmann::ordered_json to_json(const ClassificationVerdict& v);
nlohmann::ordered_json to_json(const PoincarePolynomial& p);
nlohmann::ordered_json to_json(const DimComparison& c);

}  // namespace mproj

#endif  // MPROJ_REPORT_JSON_HPP
