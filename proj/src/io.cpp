#include "cohiggs/io.hpp"

#include "cohiggs/errors.hpp"

#include <sstream>

namespace cohiggs {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const Json& field_at(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_at(const Json& j, const char* key, const std::string& where) {
    const Json& v = field_at(j, key, where);
    if (!v.is_number_integer()) bad(where, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    if (s.is_gaussian()) return gaussian_to_string(s.gaussian());
    Json j;
    j["x"] = scalar_to_json(s.x());
    j["y"] = scalar_to_json(s.y());
    j["sqrt"] = scalar_to_json(s.radicand());
    return j;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) {
        auto g = parse_gaussian(j.get<std::string>());
        if (!g) bad("scalar", "cannot parse '" + j.get<std::string>() + "'");
        return Scalar(*g);
    }
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (!j.is_object()) bad("scalar", "expected a string or an {x, y, sqrt} object");
    Scalar x = scalar_from_json(field_at(j, "x", "scalar"));
    Scalar y = scalar_from_json(field_at(j, "y", "scalar"));
    Scalar d = scalar_from_json(field_at(j, "sqrt", "scalar"));
    if (d.is_zero()) bad("scalar", "zero radicand");
    if (sqrt_in_field(d)) bad("scalar", "radicand is a perfect square; use the root directly");
    try {
        return Scalar::ext(std::move(x), std::move(y), std::move(d));
    } catch (const TowerDepthExceeded& e) {
        bad("scalar", e.what());
    }
}

Json poly_to_json(const AffinePoly& p) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json t;
        t["z"] = it->first.z;
        t["w"] = it->first.w;
        t["c"] = scalar_to_json(it->second);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

AffinePoly poly_from_json(const Json& j) {
    const Json& terms = field_at(j, "terms", "polynomial");
    if (!terms.is_array()) bad("polynomial", "'terms' must be an array");
    AffinePoly p;
    for (const Json& t : terms) {
        int ez = int_at(t, "z", "polynomial term");
        int ew = int_at(t, "w", "polynomial term");
        if (ez < 0 || ew < 0) bad("polynomial term", "negative exponent");
        Scalar c = scalar_from_json(field_at(t, "c", "polynomial term"));
        p.set_term(Exp2{ez, ew}, p.coeff(ez, ew) + c);
    }
    return p;
}

Json form_to_json(const HomogeneousForm3& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json t;
        t["x0"] = e.e0;
        t["x1"] = e.e1;
        t["x2"] = e.e2;
        t["c"] = scalar_to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["degree"] = f.degree();
    j["terms"] = std::move(terms);
    return j;
}

HomogeneousForm3 form_from_json(const Json& j) {
    int degree = int_at(j, "degree", "form");
    if (degree < 0) bad("form", "negative degree");
    HomogeneousForm3 f(degree);
    const Json& terms = field_at(j, "terms", "form");
    if (!terms.is_array()) bad("form", "'terms' must be an array");
    for (const Json& t : terms) {
        Exp3 e{int_at(t, "x0", "form term"), int_at(t, "x1", "form term"),
               int_at(t, "x2", "form term")};
        if (e.e0 < 0 || e.e1 < 0 || e.e2 < 0) bad("form term", "negative exponent");
        if (e.total() != degree) bad("form term", "exponents do not sum to the degree");
        Scalar c = scalar_from_json(field_at(t, "c", "form term"));
        f.set_term(e, f.coeff(e.e0, e.e1, e.e2) + c);
    }
    return f;
}

Json section_ok_to_json(const SectionOk& s) {
    Json j;
    j["k"] = s.k;
    j["form"] = form_to_json(s.form);
    return j;
}

SectionOk section_ok_from_json(const Json& j) {
    int k = int_at(j, "k", "O(k) section");
    HomogeneousForm3 f = form_from_json(field_at(j, "form", "O(k) section"));
    try {
        return SectionOk(k, std::move(f));
    } catch (const DegreeExceeded& e) {
        bad("O(k) section", e.what());
    }
}

Json section_tm1_to_json(const SectionTm1& s) {
    Json j;
    j["v"] = Json::array({scalar_to_json(s.v[0]), scalar_to_json(s.v[1]), scalar_to_json(s.v[2])});
    return j;
}

SectionTm1 section_tm1_from_json(const Json& j) {
    const Json& v = field_at(j, "v", "T(-1) section");
    if (!v.is_array() || v.size() != 3) bad("T(-1) section", "'v' must be a 3-element array");
    return SectionTm1{{scalar_from_json(v[0]), scalar_from_json(v[1]), scalar_from_json(v[2])}};
}

Json section_t_to_json(const SectionT& s) {
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) row.push_back(scalar_to_json(s.m.at(r, c)));
        rows.push_back(std::move(row));
    }
    Json j;
    j["m"] = std::move(rows);
    return j;
}

SectionT section_t_from_json(const Json& j) {
    const Json& m = field_at(j, "m", "T section");
    if (!m.is_array() || m.size() != 3) bad("T section", "'m' must be a 3x3 array");
    ScalarMatrix mat(3, 3);
    for (int r = 0; r < 3; ++r) {
        if (!m[r].is_array() || m[r].size() != 3) bad("T section", "'m' must be a 3x3 array");
        for (int c = 0; c < 3; ++c) mat.at(r, c) = scalar_from_json(m[r][c]);
    }
    return SectionT(std::move(mat));
}

Json triple_to_json(const Sym2Triple& t) {
    return Json::array({poly_to_json(t.t[0]), poly_to_json(t.t[1]), poly_to_json(t.t[2])});
}

Sym2Triple triple_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) bad("triple", "expected a 3-element array");
    return Sym2Triple{{poly_from_json(j[0]), poly_from_json(j[1]), poly_from_json(j[2])}};
}

Json field_to_json(const CoHiggsField& phi) {
    Json j;
    if (const auto* k0 = std::get_if<CoHiggsK0>(&phi)) {
        j["kind"] = "k0field";
        Json p;
        p["lambda"] = section_ok_to_json(k0->lambda);
        p["mu"] = section_ok_to_json(k0->mu);
        p["C"] = section_tm1_to_json(k0->C);
        j["payload"] = std::move(p);
    } else if (const auto* k1 = std::get_if<CoHiggsK1>(&phi)) {
        j["kind"] = "k1field";
        Json p;
        p["A"] = section_t_to_json(k1->A);
        p["B"] = section_t_to_json(k1->B);
        p["C"] = section_t_to_json(k1->C);
        j["payload"] = std::move(p);
    } else if (const auto* k2 = std::get_if<CoHiggsK2>(&phi)) {
        j["kind"] = "k2field";
        Json p;
        p["F"] = poly_to_json(k2->F);
        p["G"] = poly_to_json(k2->G);
        p["H"] = scalar_to_json(k2->H);
        p["C"] = section_tm1_to_json(k2->C);
        j["payload"] = std::move(p);
    } else {
        const auto& kb = std::get<CoHiggsKBig>(phi);
        j["kind"] = "kbigfield";
        Json p;
        p["k"] = kb.k;
        p["rho"] = section_ok_to_json(kb.rho);
        p["lambda"] = scalar_to_json(kb.lambda);
        p["C"] = section_tm1_to_json(kb.C);
        j["payload"] = std::move(p);
    }
    return j;
}

namespace {

CoHiggsField field_from_kind_payload(const std::string& kind, const Json& p) {
    if (kind == "k0field") {
        SectionOk lambda = section_ok_from_json(field_at(p, "lambda", "k0field"));
        SectionOk mu = section_ok_from_json(field_at(p, "mu", "k0field"));
        if (lambda.k != 1) bad("k0field", "lambda must be a section of O(1)");
        if (mu.k != 2) bad("k0field", "mu must be a section of O(2)");
        return CoHiggsK0{std::move(lambda), std::move(mu),
                         section_tm1_from_json(field_at(p, "C", "k0field"))};
    }
    if (kind == "k1field") {
        return CoHiggsK1{section_t_from_json(field_at(p, "A", "k1field")),
                         section_t_from_json(field_at(p, "B", "k1field")),
                         section_t_from_json(field_at(p, "C", "k1field"))};
    }
    if (kind == "k2field") {
        try {
            return CoHiggsK2(poly_from_json(field_at(p, "F", "k2field")),
                             poly_from_json(field_at(p, "G", "k2field")),
                             scalar_from_json(field_at(p, "H", "k2field")),
                             section_tm1_from_json(field_at(p, "C", "k2field")));
        } catch (const DegreeExceeded& e) {
            bad("k2field", e.what());
        }
    }
    if (kind == "kbigfield") {
        SectionOk rho = section_ok_from_json(field_at(p, "rho", "kbigfield"));
        if (rho.k != 2) bad("kbigfield", "rho must be a section of O(2)");
        try {
            return CoHiggsKBig(int_at(p, "k", "kbigfield"), std::move(rho),
                               scalar_from_json(field_at(p, "lambda", "kbigfield")),
                               section_tm1_from_json(field_at(p, "C", "kbigfield")));
        } catch (const std::runtime_error& e) {
            bad("kbigfield", e.what());
        }
    }
    bad("document", "unknown field kind '" + kind + "'");
}

}  // namespace

CoHiggsField field_from_json(const Json& j) {
    const Json& kind = field_at(j, "kind", "document");
    if (!kind.is_string()) bad("document", "'kind' must be a string");
    return field_from_kind_payload(kind.get<std::string>(), field_at(j, "payload", "document"));
}

Json det_to_json(const DetSection& d) {
    Json j;
    j["triple"] = triple_to_json(d.triple);
    if (const auto* qc = std::get_if<DetStructureQC>(&d.structured)) {
        Json s;
        s["form"] = "q_sym2";
        s["q"] = section_ok_to_json(qc->q);
        s["C"] = section_tm1_to_json(qc->C);
        j["structured"] = std::move(s);
    } else if (const auto* sa = std::get_if<DetStructureSymA>(&d.structured)) {
        Json s;
        s["form"] = "neg_sym2_A";
        s["A"] = section_t_to_json(sa->A);
        j["structured"] = std::move(s);
    } else if (const auto* rh = std::get_if<DetStructureRho>(&d.structured)) {
        Json s;
        s["form"] = "lambda_rho_sym2";
        s["lambda"] = scalar_to_json(rh->lambda);
        s["rho"] = section_ok_to_json(rh->rho);
        s["C"] = section_tm1_to_json(rh->C);
        j["structured"] = std::move(s);
    } else {
        j["structured"] = nullptr;
    }
    return j;
}

Json image_point_to_json(const ImagePoint& p) {
    Json j;
    if (std::holds_alternative<ImageZero>(p)) {
        j["type"] = "zero";
    } else if (const auto* qc = std::get_if<ImageQSym2>(&p)) {
        j["type"] = "q_sym2";
        j["q"] = section_ok_to_json(qc->q);
        j["C"] = section_tm1_to_json(qc->C);
    } else if (const auto* st = std::get_if<ImageSymTangent>(&p)) {
        j["type"] = "sym_tangent";
        j["A"] = section_t_to_json(st->A);
    } else {
        const auto& rp = std::get<ImageRhoSym2>(p);
        j["type"] = "rho_sym2";
        j["C"] = section_tm1_to_json(rp.C);
        j["rho"] = section_ok_to_json(rp.rho);
    }
    return j;
}

Json schwarz_info_to_json(const SchwarzInfo& info) {
    Json j;
    j["k"] = info.k;
    j["c1"] = info.c1;
    j["c2"] = info.c2;
    j["splitting"] = splitting_name(info.splitting);
    j["h1_end0"] = info.h1_end0;
    return j;
}

InputDocument parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    const Json& kind_j = field_at(j, "kind", "document");
    if (!kind_j.is_string()) bad("document", "'kind' must be a string");
    const std::string kind = kind_j.get<std::string>();
    const Json& p = field_at(j, "payload", "document");
    if (kind == "section") {
        const Json& bundle = field_at(p, "bundle", "section document");
        if (!bundle.is_string()) bad("section document", "'bundle' must be a string");
        const std::string b = bundle.get<std::string>();
        if (b == "O") return SectionDocument{section_ok_from_json(p)};
        if (b == "T(-1)") return SectionDocument{section_tm1_from_json(p)};
        if (b == "T") return SectionDocument{section_t_from_json(p)};
        bad("section document", "unknown bundle '" + b + "' (expected O, T or T(-1))");
    }
    if (kind == "pair") {
        SectionOk q = section_ok_from_json(field_at(p, "q", "pair document"));
        if (q.k != 2) bad("pair document", "q must be a section of O(2)");
        return PairDocument{std::move(q), section_tm1_from_json(field_at(p, "C", "pair document"))};
    }
    return field_from_kind_payload(kind, p);
}

std::string image_point_to_text(const ImagePoint& p) {
    std::ostringstream os;
    if (std::holds_alternative<ImageZero>(p)) {
        os << "zero section";
    } else if (const auto* qc = std::get_if<ImageQSym2>(&p)) {
        os << "[q (x) Sym2(C)]  q = " << qc->q.form.to_string() << "  C = ("
           << qc->C.v[0].to_string() << ", " << qc->C.v[1].to_string() << ", "
           << qc->C.v[2].to_string() << ")";
    } else if (const auto* st = std::get_if<ImageSymTangent>(&p)) {
        os << "[-Sym2(A)]  A = [";
        for (int r = 0; r < 3; ++r) {
            os << (r > 0 ? "; " : "");
            for (int c = 0; c < 3; ++c)
                os << (c > 0 ? ", " : "") << st->A.m.at(r, c).to_string();
        }
        os << "]";
    } else {
        const auto& rp = std::get<ImageRhoSym2>(p);
        os << "[rho (x) Sym2(C)]  rho = " << rp.rho.form.to_string() << "  C = ("
           << rp.C.v[0].to_string() << ", " << rp.C.v[1].to_string() << ", "
           << rp.C.v[2].to_string() << ")";
    }
    return os.str();
}

std::string det_to_text(const DetSection& d) {
    std::ostringstream os;
    os << "det triple (chart 0):\n";
    os << "  t11 = " << d.triple.t[0].to_string() << "\n";
    os << "  t12 = " << d.triple.t[1].to_string() << "\n";
    os << "  t22 = " << d.triple.t[2].to_string() << "\n";
    if (const auto* qc = std::get_if<DetStructureQC>(&d.structured)) {
        os << "structured: q (x) Sym2(C), q = " << qc->q.form.to_string() << "\n";
    } else if (std::holds_alternative<DetStructureSymA>(d.structured)) {
        os << "structured: -Sym2(A)\n";
    } else if (const auto* rh = std::get_if<DetStructureRho>(&d.structured)) {
        os << "structured: lambda rho (x) Sym2(C), lambda = " << rh->lambda.to_string() << "\n";
    }
    return os.str();
}

}  // namespace cohiggs
