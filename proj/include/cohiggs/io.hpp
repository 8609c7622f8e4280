#pragma once

#include "cohiggs/classify.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace cohiggs {

using Json = nlohmann::json;

// Scalars travel as exact strings "a/b" or "a/b+c/d i"; tower elements as
// {"x":, "y":, "sqrt":} with the radicand checked to be a non-square.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json poly_to_json(const AffinePoly& p);
AffinePoly poly_from_json(const Json& j);

Json form_to_json(const HomogeneousForm3& f);
HomogeneousForm3 form_from_json(const Json& j);

Json section_ok_to_json(const SectionOk& s);
SectionOk section_ok_from_json(const Json& j);

Json section_tm1_to_json(const SectionTm1& s);
SectionTm1 section_tm1_from_json(const Json& j);

Json section_t_to_json(const SectionT& s);
SectionT section_t_from_json(const Json& j);

Json triple_to_json(const Sym2Triple& t);
Sym2Triple triple_from_json(const Json& j);

Json field_to_json(const CoHiggsField& phi);
CoHiggsField field_from_json(const Json& j);

Json det_to_json(const DetSection& d);
Json image_point_to_json(const ImagePoint& p);
Json schwarz_info_to_json(const SchwarzInfo& info);

/// A parsed input document: a co-Higgs field, a single section, or a
/// (q, C) pair, per the "kind" tag.
struct SectionDocument {
    std::variant<SectionOk, SectionTm1, SectionT> section;
};
struct PairDocument {
    SectionOk q{2, HomogeneousForm3(2)};
    SectionTm1 C;
};
using InputDocument = std::variant<CoHiggsField, SectionDocument, PairDocument>;

/// Parses a UTF-8 JSON document {"kind": ..., "payload": ...}. Throws
/// ParseError with a position/context diagnostic on malformed input.
InputDocument parse_document(const std::string& text);

std::string image_point_to_text(const ImagePoint& p);
std::string det_to_text(const DetSection& d);

}  // namespace cohiggs
