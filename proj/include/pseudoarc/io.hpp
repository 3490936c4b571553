/**************************************************************************
 * io.hpp
 *
 * Copyright 2026 The pseudoarc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

// JSON (de)serialization of arcs, codes, forms, Lambda sets and NRC point
// lists. Field elements are written as their integer encodings. Every file
// carries the tower parameters and both moduli so a reader can reject data
// produced over a different field.

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "nrc.hpp"
#include "pseudoarc.hpp"
#include "quadrics.hpp"

namespace pseudoarc::io {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// Thrown for files that are not well-formed artifacts.
struct format_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline json field_header(const FieldCtx& ctx) {
    return {{"p", ctx.p()},
            {"e", ctx.e()},
            {"h", ctx.h()},
            {"q", ctx.q()},
            {"base_modulus", ctx.base().modulus()},
            {"top_modulus", ctx.top().modulus()},
            {"embedding_image", ctx.embedding_image().code},
            {"normal_element", ctx.normal_element().code}};
}

inline json header(const FieldCtx& ctx, const std::string& kind) {
    return {{"schema_version", schema_version}, {"kind", kind}, {"field", field_header(ctx)}};
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw format_error(what);
}

template <typename T>
T get(const json& j, const char* key) {
    require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw format_error(std::string("bad field '") + key + "': " + e.what());
    }
}

/// Rebuild the tower named in a file header and check the recorded moduli.
inline FieldCtx context_from(const json& doc) {
    require(doc.is_object(), "artifact must be a JSON object");
    require(get<int>(doc, "schema_version") == schema_version, "unsupported schema_version");
    const json& f = doc.at("field");
    FieldCtx ctx(get<std::uint32_t>(f, "p"), get<unsigned>(f, "e"), get<unsigned>(f, "h"));
    require(nlohmann::json::parse(field_header(ctx).dump()) == nlohmann::json::parse(f.dump()), "field header does not match the tower this library builds");
    return ctx;
}

inline std::string kind_of(const json& doc) { return get<std::string>(doc, "kind"); }

inline json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Elem x : m.row(r)) row.push_back(x.code);
        rows.push_back(row);
    }
    return rows;
}

inline Matrix matrix_from(const json& rows, const Field& F, std::size_t cols) {
    require(rows.is_array(), "matrix must be an array of rows");
    Matrix m;
    m.set_cols(cols);
    for (const auto& row : rows) {
        require(row.is_array() && row.size() == cols, "matrix row of the wrong length");
        Vec v;
        for (const auto& x : row) {
            require(x.is_number_unsigned(), "matrix entry must be a non-negative integer");
            const Elem e{x.get<std::uint32_t>()};
            require(F.contains(e), "matrix entry outside the field");
            v.push_back(e);
        }
        m.append_row(v);
    }
    return m;
}

inline json vec_json(const Vec& v) {
    json a = json::array();
    for (Elem x : v) a.push_back(x.code);
    return a;
}

// ---------------------------------------------------------------- arcs

inline ElementKind element_kind_from(const std::string& s) {
    for (auto k : {ElementKind::Imaginary, ElementKind::Osculating, ElementKind::OsculatingInfty, ElementKind::External})
        if (s == to_string(k)) return k;
    throw format_error("unknown element tag '" + s + "'");
}

inline json arc_json(const FieldCtx& ctx, const PseudoArc& arc) {
    json doc = header(ctx, "arc");
    doc["k"] = arc.k;
    doc["warnings"] = arc.warnings;
    json els = json::array();
    for (std::size_t i = 0; i < arc.size(); ++i) {
        const ElementTag t = i < arc.tags.size() ? arc.tags[i] : ElementTag{};
        json tag = {{"kind", to_string(t.kind)}};
        if (t.kind == ElementKind::Imaginary || t.kind == ElementKind::Osculating) tag["value"] = t.value.code;
        els.push_back({{"tag", tag}, {"basis", matrix_json(arc.elements[i].basis())}});
    }
    doc["elements"] = els;
    return doc;
}

inline PseudoArc arc_from(const FieldCtx& ctx, const json& doc) {
    require(kind_of(doc) == "arc", "expected an arc file");
    PseudoArc arc;
    arc.h = ctx.h();
    arc.q = ctx.q();
    arc.k = get<unsigned>(doc, "k");
    require(arc.k >= 1, "k must be positive");
    if (doc.contains("warnings")) arc.warnings = get<std::vector<std::string>>(doc, "warnings");
    const std::size_t n = std::size_t(arc.h) * arc.k;
    const json& els = doc.at("elements");
    require(els.is_array(), "elements must be an array");
    for (const auto& e : els) {
        const Matrix b = matrix_from(e.at("basis"), ctx.base(), n);
        arc.elements.push_back(Subspace::from_rows(ctx, Level::Base, b));
        ElementTag tag;
        if (e.contains("tag")) {
            tag.kind = element_kind_from(get<std::string>(e.at("tag"), "kind"));
            if (e.at("tag").contains("value")) tag.value = {get<std::uint32_t>(e.at("tag"), "value")};
        }
        arc.tags.push_back(tag);
    }
    return arc;
}

// ---------------------------------------------------------------- codes

inline CoordKind coord_kind_from(const std::string& s) {
    for (auto k : {CoordKind::Alpha, CoordKind::Deriv, CoordKind::Infty, CoordKind::External})
        if (s == to_string(k)) return k;
    throw format_error("unknown coordinate kind '" + s + "'");
}

inline json code_json(const FieldCtx& ctx, const AdditiveCode& code) {
    json doc = header(ctx, "code");
    doc["k"] = code.k;
    doc["omega"] = code.omega.code;
    json coords = json::array();
    for (const auto& c : code.coords) {
        json j = {{"kind", to_string(c.kind)}};
        if (c.kind == CoordKind::Alpha || c.kind == CoordKind::Deriv) j["value"] = c.value.code;
        coords.push_back(j);
    }
    doc["coords"] = coords;
    doc["gen"] = matrix_json(code.gen);
    return doc;
}

inline AdditiveCode code_from(const FieldCtx& ctx, const json& doc) {
    require(kind_of(doc) == "code", "expected a code file");
    AdditiveCode c;
    c.h = ctx.h();
    c.q = ctx.q();
    c.k = get<unsigned>(doc, "k");
    require(c.k >= 1, "k must be positive");
    c.omega = {get<std::uint32_t>(doc, "omega")};
    require(ctx.top().contains(c.omega) && ctx.is_normal(c.omega), "omega is not a normal element");
    for (const auto& j : doc.at("coords")) {
        Coord cd{coord_kind_from(get<std::string>(j, "kind")), {}};
        if (j.contains("value")) cd.value = {get<std::uint32_t>(j, "value")};
        c.coords.push_back(cd);
    }
    const json& g = doc.at("gen");
    require(g.is_array() && g.size() == c.dim(), "generator must have hk rows");
    c.gen = matrix_from(g, ctx.top(), c.coords.size());
    if (c.gen.rows() == 0) c.gen = Matrix(c.dim(), 0);
    return c;
}

// ---------------------------------------------------------------- forms

inline json forms_json(const FieldCtx& ctx, const std::vector<QuadraticForm>& forms) {
    json doc = header(ctx, "forms");
    json arr = json::array();
    for (const auto& f : forms) arr.push_back({{"level", to_string(f.level)}, {"n", f.n}, {"coeffs", vec_json(f.coeffs)}});
    doc["forms"] = arr;
    return doc;
}

inline std::vector<QuadraticForm> forms_from(const FieldCtx& ctx, const json& doc) {
    require(kind_of(doc) == "forms", "expected a forms file");
    std::vector<QuadraticForm> out;
    for (const auto& j : doc.at("forms")) {
        const auto lvl = get<std::string>(j, "level");
        require(lvl == "base" || lvl == "top", "level must be 'base' or 'top'");
        QuadraticForm f;
        f.level = lvl == "base" ? Level::Base : Level::Top;
        f.n = get<std::size_t>(j, "n");
        const Field& F = ctx.field(f.level);
        for (auto c : get<std::vector<std::uint32_t>>(j, "coeffs")) {
            require(F.contains({c}), "form coefficient outside the field");
            f.coeffs.push_back({c});
        }
        require(f.coeffs.size() == QuadraticForm::monomials(f.n), "form has the wrong number of coefficients");
        out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------- Lambda, NRC

inline json lambda_json(const FieldCtx& ctx, const LambdaSet& lam) {
    json doc = header(ctx, "lambda");
    json reps = json::array();
    for (Elem a : lam.reps) reps.push_back(a.code);
    doc["reps"] = reps;
    doc["count"] = lam.reps.size();
    doc["mobius_count"] = lambda_count(lam.h, lam.q);
    return doc;
}

inline LambdaSet lambda_from(const FieldCtx& ctx, const json& doc) {
    require(kind_of(doc) == "lambda", "expected a lambda file");
    LambdaSet lam{ctx.h(), ctx.q(), {}};
    for (auto c : get<std::vector<std::uint32_t>>(doc, "reps")) {
        require(ctx.top().contains({c}), "representative outside F_{q^h}");
        lam.reps.push_back({c});
    }
    require(get<std::size_t>(doc, "count") == lam.reps.size(), "count disagrees with reps");
    return lam;
}

inline json nrc_json(const FieldCtx& ctx, Level level, std::size_t N, const std::vector<NrcPoint>& pts) {
    json doc = header(ctx, "nrc");
    doc["level"] = to_string(level);
    doc["N"] = N;
    json arr = json::array();
    for (const auto& p : pts) {
        json j;
        j["param"] = p.param.infinite ? json("infinity") : json(p.param.t.code);
        j["coords"] = vec_json(p.coords);
        arr.push_back(j);
    }
    doc["points"] = arr;
    return doc;
}

inline std::vector<NrcPoint> nrc_from(const FieldCtx& ctx, const json& doc, Level& level, std::size_t& N) {
    require(kind_of(doc) == "nrc", "expected an nrc file");
    const auto lvl = get<std::string>(doc, "level");
    require(lvl == "base" || lvl == "top", "level must be 'base' or 'top'");
    level = lvl == "base" ? Level::Base : Level::Top;
    N = get<std::size_t>(doc, "N");
    const Field& F = ctx.field(level);
    std::vector<NrcPoint> out;
    for (const auto& j : doc.at("points")) {
        const json& par = j.at("param");
        const CurveParam cp = par.is_string() ? CurveParam::infinity() : CurveParam::finite({par.get<std::uint32_t>()});
        require(par.is_string() ? par.get<std::string>() == "infinity" : F.contains(cp.t), "bad curve parameter");
        NrcPoint p = veronese(F, cp, N);
        require(vec_json(p.coords) == j.at("coords"), "point coordinates disagree with its parameter");
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------- words

/// One coordinate per line: an integer encoding or `E` for an erasure.
/// Blank lines and lines starting with '#' are skipped.
inline ReceivedWord read_word(std::istream& in, const Field& F) {
    ReceivedWord w;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        const auto e = line.find_last_not_of(" \t\r");
        const std::string tok = line.substr(b, e - b + 1);
        if (tok == "E" || tok == "e") {
            w.push_back(std::nullopt);
            continue;
        }
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok.empty() || tok[0] == '-') throw format_error("line " + std::to_string(lineno) + ": expected an integer or E");
        if (v >= F.size()) throw format_error("line " + std::to_string(lineno) + ": symbol outside the field");
        w.push_back(Elem{static_cast<std::uint32_t>(v)});
    }
    return w;
}

inline std::string write_word(const ReceivedWord& w) {
    std::ostringstream os;
    for (const auto& x : w) {
        if (x)
            os << x->code << '\n';
        else
            os << "E\n";
    }
    return os.str();
}

inline json parse(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw format_error(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace pseudoarc::io
