/**************************************************************************
 * cli.hpp
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

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it in-process.
//
// Exit status: 0 verified/constructed, 1 property refuted (a witness is
// printed), 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pseudoarc/codes.hpp"
#include "pseudoarc/fixture.hpp"
#include "pseudoarc/io.hpp"
#include "pseudoarc/nrc.hpp"
#include "pseudoarc/pseudoarc.hpp"
#include "pseudoarc/quadrics.hpp"

namespace pseudoarc::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_refuted = 1;
inline constexpr int exit_usage = 2;

inline constexpr const char* threads_env = "PSEUDOARC_THREADS";

using io::json;

struct RunConfig {
    bool json_out = false;
    unsigned threads = 1;
    std::uint64_t seed = 0;

    unsigned h = 2;
    unsigned k = 2;
    std::uint64_t q = 0;
    std::size_t N = 0;
    bool extend = false;
    unsigned k_override = 0;
    std::uint64_t samples = 0;
    std::uint64_t budget = default_codeword_budget;
    std::uint64_t limit = default_point_limit;
    std::vector<std::string> files;
    std::string out_file;
};

inline unsigned default_threads() {
    if (const char* s = std::getenv(threads_env)) {
        try {
            const unsigned long v = std::stoul(s);
            if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

namespace detail {

struct Io {
    std::ostream& out;
    std::ostream& err;
};

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::format_error("cannot open '" + path + "'");
    return io::parse(in);
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::format_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Artifacts go to --out when given, otherwise to stdout.
inline void emit_artifact(const RunConfig& cfg, Io& o, const json& doc, const std::string& summary) {
    if (cfg.out_file.empty()) {
        o.out << doc.dump(2) << '\n';
        return;
    }
    std::ofstream f(cfg.out_file);
    if (!f) throw io::format_error("cannot write '" + cfg.out_file + "'");
    f << doc.dump(2) << '\n';
    if (cfg.json_out)
        o.out << json{{"written", cfg.out_file}, {"summary", summary}, {"seed", cfg.seed}}.dump() << '\n';
    else
        o.out << summary << "\nwritten to " << cfg.out_file << '\n';
}

inline FieldCtx ctx_for(std::uint64_t q, unsigned h) {
    const auto [p, e] = split_prime_power(q);
    return FieldCtx(p, e, h);
}

inline std::string subset_string(const std::vector<std::size_t>& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? ", " : "") + std::to_string(s[i]);
    return r + "}";
}

inline json vec_codes(const Vec& v) { return io::vec_json(v); }

}  // namespace detail

inline int construct_arc(const RunConfig& cfg, detail::Io& o) {
    const FieldCtx ctx = detail::ctx_for(cfg.q, cfg.h);
    PseudoArc arc = build_P(ctx, cfg.k);
    if (cfg.extend) arc = extend(ctx, arc);
    std::string summary = std::string(cfg.extend ? "extended " : "") + "pseudo-arc: " + std::to_string(arc.size()) + " elements, h = " +
                          std::to_string(arc.h) + ", k = " + std::to_string(arc.k) + ", q = " + std::to_string(arc.q);
    for (const auto& w : arc.warnings) o.err << "warning: " << w << '\n';
    detail::emit_artifact(cfg, o, io::arc_json(ctx, arc), summary);
    return exit_ok;
}

inline int verify_arc(const RunConfig& cfg, detail::Io& o) {
    const json doc = detail::read_json_file(cfg.files.at(0));
    const FieldCtx ctx = io::context_from(doc);
    PseudoArc arc = io::arc_from(ctx, doc);
    const unsigned k = cfg.k_override ? cfg.k_override : arc.k;
    if (k != arc.k) throw io::format_error("--k disagrees with the ambient dimension recorded in the file");
    const bool sampled = cfg.samples > 0;
    const ArcVerdict v = sampled ? is_pseudo_arc_sampled(ctx, arc.elements, k, cfg.samples, cfg.seed)
                                 : is_pseudo_arc(ctx, arc.elements, k, cfg.threads);
    const std::uint64_t bound = thas_bound(arc.h, k, arc.q);
    if (cfg.json_out) {
        json r = {{"verdict", v.holds}, {"mode", sampled ? "sampled" : "exhaustive"}, {"size", arc.size()}, {"k", k},
                  {"subsets_checked", v.subsets_checked}, {"thas_bound", bound}, {"seed", cfg.seed}};
        if (!v.holds) r["witness"] = v.witness;
        o.out << r.dump() << '\n';
    } else {
        o.out << (sampled ? "sampled check: " : "exhaustive check: ") << v.subsets_checked << " subsets of size " << k << " out of "
              << arc.size() << " elements\n";
        if (v.holds)
            o.out << "pseudo-arc: yes (size " << arc.size() << ", Thas bound " << bound << ")\n";
        else
            o.out << "pseudo-arc: no, elements " << detail::subset_string(v.witness) << " do not span PG(" << arc.h * k - 1 << ","
                  << arc.q << ")\n";
        o.out << "seed: " << cfg.seed << '\n';
    }
    return v.holds ? exit_ok : exit_refuted;
}

inline int verify_example(const RunConfig& cfg, detail::Io& o) {
    const FieldCtx ctx = fixture::context();
    const auto checks = fixture::run_checks(ctx, cfg.threads);
    const bool ok = fixture::all_pass(checks);
    if (cfg.json_out) {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        o.out << json{{"verdict", ok}, {"checks", arr}, {"seed", cfg.seed}}.dump() << '\n';
    } else {
        for (const auto& c : checks) {
            const bool info = c.detail == "informational";
            o.out << (info ? (c.pass ? "note yes " : "note no  ") : (c.pass ? "ok       " : "FAILED   ")) << c.name;
            if (!info && !c.detail.empty()) o.out << " (" << c.detail << ")";
            o.out << '\n';
        }
        o.out << (ok ? "PG(5,4) example verified\n" : "PG(5,4) example NOT verified\n");
    }
    return ok ? exit_ok : exit_refuted;
}

inline int lambda_cmd(const RunConfig& cfg, detail::Io& o) {
    const FieldCtx ctx = detail::ctx_for(cfg.q, cfg.h);
    const LambdaSet lam = lambda_set(ctx);
    const std::uint64_t expected = lambda_count(cfg.h, cfg.q);
    if (cfg.json_out) {
        json reps = json::array();
        for (Elem a : lam.reps) reps.push_back(a.code);
        o.out << json{{"h", cfg.h}, {"q", cfg.q}, {"reps", reps}, {"count", lam.reps.size()}, {"mobius_count", expected}, {"seed", cfg.seed}}.dump()
              << '\n';
    } else {
        o.out << "Lambda_{" << cfg.h << "," << cfg.q << "}:";
        for (Elem a : lam.reps) o.out << ' ' << a.code;
        o.out << "\ncount " << lam.reps.size() << ", Mobius formula " << expected << '\n';
    }
    return lam.reps.size() == expected ? exit_ok : exit_refuted;
}

inline int quadrics_through(const RunConfig& cfg, detail::Io& o) {
    const json doc = detail::read_json_file(cfg.files.at(0));
    const FieldCtx ctx = io::context_from(doc);
    const PseudoArc arc = io::arc_from(ctx, doc);
    const std::size_t n = std::size_t(arc.h) * arc.k;
    const auto vs = vanishing_space(ctx, n, arc.elements);
    const std::string summary = "quadrics through " + std::to_string(arc.size()) + " subspaces of PG(" + std::to_string(n - 1) + "," +
                                std::to_string(ctx.q()) + "): dimension " + std::to_string(vs.basis.size()) + " (conditions rank " +
                                std::to_string(vs.conditions_rank) + ")";
    if (cfg.out_file.empty() && !cfg.json_out) {
        o.out << summary << '\n';
        for (const auto& f : vs.basis) {
            o.out << "  ";
            for (Elem c : f.coeffs) o.out << c.code << ' ';
            o.out << '\n';
        }
        return exit_ok;
    }
    detail::emit_artifact(cfg, o, io::forms_json(ctx, vs.basis), summary);
    return exit_ok;
}

inline int quadrics_certify(const RunConfig& cfg, detail::Io& o) {
    const json adoc = detail::read_json_file(cfg.files.at(0));
    const json fdoc = detail::read_json_file(cfg.files.at(1));
    const FieldCtx ctx = io::context_from(adoc);
    const FieldCtx fctx = io::context_from(fdoc);
    if (fctx.p() != ctx.p() || fctx.e() != ctx.e()) throw io::format_error("arc and forms are over different base fields");
    const PseudoArc arc = io::arc_from(ctx, adoc);
    const auto forms = io::forms_from(fctx, fdoc);
    const std::size_t n = std::size_t(arc.h) * arc.k;
    const auto v = is_complete_intersection(ctx, n, arc.elements, forms, cfg.limit);
    if (cfg.json_out) {
        json r = {{"verdict", v.holds}, {"points_checked", v.points_checked}, {"seed", cfg.seed}};
        if (v.extra) r["extra_point"] = detail::vec_codes(*v.extra);
        if (v.missed) r["missed_point"] = detail::vec_codes(*v.missed);
        o.out << r.dump() << '\n';
    } else {
        o.out << "enumerated " << v.points_checked << " points of PG(" << n - 1 << "," << ctx.q() << ")\n";
        if (v.extra) o.out << "common zero outside the subspaces: " << detail::vec_codes(*v.extra).dump() << '\n';
        if (v.missed) o.out << "subspace point where a form is nonzero: " << detail::vec_codes(*v.missed).dump() << '\n';
        o.out << (v.holds ? "complete intersection: yes\n" : "complete intersection: no\n");
    }
    return v.holds ? exit_ok : exit_refuted;
}

inline int code_gen(const RunConfig& cfg, detail::Io& o) {
    const FieldCtx ctx = detail::ctx_for(cfg.q, cfg.h);
    AdditiveCode code = gen_matrix_S(ctx, cfg.k, lambda_set(ctx).reps);
    if (cfg.extend) code = extend_code_fully(ctx, code);
    const std::string summary = "code: n = " + std::to_string(code.length()) + ", q^{hk} = " + std::to_string(cfg.q) + "^" +
                                std::to_string(code.dim()) + " codewords over F_" + std::to_string(ctx.order());
    detail::emit_artifact(cfg, o, io::code_json(ctx, code), summary);
    return exit_ok;
}

inline int code_encode(const RunConfig& cfg, detail::Io& o) {
    const json doc = detail::read_json_file(cfg.files.at(0));
    const FieldCtx ctx = io::context_from(doc);
    const AdditiveCode code = io::code_from(ctx, doc);
    std::istringstream msg(detail::read_text(cfg.files.at(1)));
    const ReceivedWord coeffs = io::read_word(msg, ctx.base());
    std::vector<Elem> f;
    for (const auto& c : coeffs) {
        if (!c) throw io::format_error("erasure marks are not allowed in a message");
        f.push_back(*c);
    }
    const Word w = encode(ctx, code, make_poly(Level::Base, f));
    if (cfg.json_out) {
        o.out << json{{"codeword", detail::vec_codes(w)}, {"seed", cfg.seed}}.dump() << '\n';
    } else {
        ReceivedWord rw(w.begin(), w.end());
        o.out << io::write_word(rw);
    }
    return exit_ok;
}

inline int code_decode(const RunConfig& cfg, detail::Io& o) {
    const json doc = detail::read_json_file(cfg.files.at(0));
    const FieldCtx ctx = io::context_from(doc);
    const AdditiveCode code = io::code_from(ctx, doc);
    std::istringstream in(detail::read_text(cfg.files.at(1)));
    const ReceivedWord rw = io::read_word(in, ctx.top());
    if (rw.size() != code.length()) throw io::format_error("word length differs from the code length");
    Poly f;
    try {
        f = erasure_decode(ctx, code, rw);
    } catch (const std::runtime_error& e) {
        if (cfg.json_out)
            o.out << json{{"verdict", false}, {"reason", e.what()}, {"seed", cfg.seed}}.dump() << '\n';
        else
            o.out << "decoding failed: " << e.what() << '\n';
        return exit_refuted;
    }
    Vec coeffs = f.coeffs;
    coeffs.resize(code.dim(), ctx.base().zero());
    if (cfg.json_out) {
        o.out << json{{"verdict", true}, {"message", detail::vec_codes(coeffs)}, {"seed", cfg.seed}}.dump() << '\n';
    } else {
        ReceivedWord m(coeffs.begin(), coeffs.end());
        o.out << io::write_word(m);
    }
    return exit_ok;
}

inline int code_distance(const RunConfig& cfg, detail::Io& o) {
    const json doc = detail::read_json_file(cfg.files.at(0));
    const FieldCtx ctx = io::context_from(doc);
    const AdditiveCode code = io::code_from(ctx, doc);
    const auto rep = min_distance(ctx, code, cfg.budget, cfg.threads);
    const std::size_t singleton = code.length() + 1 - code.k;
    const bool mds = rep.distance == singleton;
    if (cfg.json_out) {
        o.out << json{{"n", code.length()}, {"codewords", rep.codewords}, {"distance", rep.distance}, {"singleton", singleton},
                      {"mds", mds}, {"witness_message", detail::vec_codes(rep.witness)}, {"seed", cfg.seed}}
                     .dump()
              << '\n';
    } else {
        o.out << "(" << code.length() << ", " << code.q << "^" << code.dim() << ", " << rep.distance << ") over F_" << ctx.order() << '\n';
        o.out << "Singleton bound n - k + 1 = " << singleton << (mds ? ": MDS\n" : ": not MDS\n");
        o.out << "minimum weight message: " << detail::vec_codes(rep.witness).dump() << '\n';
    }
    return exit_ok;
}

inline int code_fold(const RunConfig& cfg, detail::Io& o) {
    const json doc = detail::read_json_file(cfg.files.at(0));
    const FieldCtx ctx = io::context_from(doc);
    const AdditiveCode code = io::code_from(ctx, doc);
    PseudoArc arc;
    arc.h = code.h;
    arc.k = code.k;
    arc.q = code.q;
    arc.elements = fold_columns(ctx, code);
    for (const auto& c : code.coords) {
        switch (c.kind) {
            case CoordKind::Alpha: arc.tags.push_back({ElementKind::Imaginary, c.value}); break;
            case CoordKind::Deriv: arc.tags.push_back({ElementKind::Osculating, c.value}); break;
            case CoordKind::Infty: arc.tags.push_back({ElementKind::OsculatingInfty, {}}); break;
            case CoordKind::External: arc.tags.push_back({ElementKind::External, {}}); break;
        }
    }
    detail::emit_artifact(cfg, o, io::arc_json(ctx, arc), "folded " + std::to_string(arc.size()) + " columns");
    return exit_ok;
}

inline int export_lambda(const RunConfig& cfg, detail::Io& o) {
    const FieldCtx ctx = detail::ctx_for(cfg.q, cfg.h);
    const auto lam = lambda_set(ctx);
    detail::emit_artifact(cfg, o, io::lambda_json(ctx, lam), std::to_string(lam.reps.size()) + " representatives");
    return exit_ok;
}

inline int export_nrc(const RunConfig& cfg, detail::Io& o) {
    const FieldCtx ctx = detail::ctx_for(cfg.q, 1);
    const auto pts = nrc_points(ctx.base(), cfg.N);
    detail::emit_artifact(cfg, o, io::nrc_json(ctx, Level::Base, cfg.N, pts), std::to_string(pts.size()) + " points");
    return exit_ok;
}

/// Parse and validate any artifact, then write it back canonically.
inline int import_cmd(const RunConfig& cfg, detail::Io& o) {
    const json doc = detail::read_json_file(cfg.files.at(0));
    const FieldCtx ctx = io::context_from(doc);
    const std::string kind = io::kind_of(doc);
    json canon;
    if (kind == "arc") {
        canon = io::arc_json(ctx, io::arc_from(ctx, doc));
    } else if (kind == "code") {
        canon = io::code_json(ctx, io::code_from(ctx, doc));
    } else if (kind == "forms") {
        canon = io::forms_json(ctx, io::forms_from(ctx, doc));
    } else if (kind == "lambda") {
        canon = io::lambda_json(ctx, io::lambda_from(ctx, doc));
    } else if (kind == "nrc") {
        Level level;
        std::size_t N = 0;
        const auto pts = io::nrc_from(ctx, doc, level, N);
        canon = io::nrc_json(ctx, level, N, pts);
    } else {
        throw io::format_error("unknown artifact kind '" + kind + "'");
    }
    detail::emit_artifact(cfg, o, canon, "imported " + kind);
    return exit_ok;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    cfg.threads = default_threads();
    detail::Io o{out, err};

    CLI::App app{"pseudo-arcs, their quadrics and the additive MDS codes they define", "pseudoarc"};
    app.fallthrough();
    // -h is taken by the --h parameter of several commands
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    app.add_flag("--json", cfg.json_out, "machine-readable output");
    app.add_option("--threads", cfg.threads, std::string("worker threads (default from ") + threads_env + ")")->check(CLI::Range(1, 1024));
    app.add_option("--seed", cfg.seed, "seed for sampled modes");

    std::function<int()> action;
    auto params = [&](CLI::App* sc, bool with_k) {
        sc->add_option("--h", cfg.h, "extension degree h")->required()->check(CLI::Range(1, 16));
        if (with_k) sc->add_option("--k", cfg.k, "k")->required()->check(CLI::Range(2, 64));
        sc->add_option("--q", cfg.q, "base field order (prime power)")->required();
    };
    auto out_opt = [&](CLI::App* sc) { sc->add_option("--out,-o", cfg.out_file, "write the artifact here"); };

    auto* c_arc = app.add_subcommand("construct-arc", "build P_{h,k,q}, optionally with its osculating extension");
    params(c_arc, true);
    c_arc->add_flag("--extend", cfg.extend, "append the osculating (h-1)-spaces");
    out_opt(c_arc);
    c_arc->callback([&] { action = [&] { return construct_arc(cfg, o); }; });

    auto* c_ver = app.add_subcommand("verify-arc", "check that every k elements span the space");
    c_ver->add_option("file", cfg.files, "arc file")->required()->expected(1);
    c_ver->add_option("--k", cfg.k_override, "k (defaults to the file)");
    c_ver->add_option("--sample", cfg.samples, "check this many random subsets instead");
    c_ver->callback([&] { action = [&] { return verify_arc(cfg, o); }; });

    auto* c_ex = app.add_subcommand("verify-example", "re-verify the embedded PG(5,4) example");
    c_ex->callback([&] { action = [&] { return verify_example(cfg, o); }; });

    auto* c_lam = app.add_subcommand("lambda", "Frobenius orbit representatives of size h");
    params(c_lam, false);
    c_lam->callback([&] { action = [&] { return lambda_cmd(cfg, o); }; });

    auto* c_quad = app.add_subcommand("quadrics", "quadrics through subspaces");
    c_quad->require_subcommand(1);
    auto* c_through = c_quad->add_subcommand("through", "basis of the quadrics containing an arc");
    c_through->add_option("file", cfg.files, "arc file")->required()->expected(1);
    out_opt(c_through);
    c_through->callback([&] { action = [&] { return quadrics_through(cfg, o); }; });
    auto* c_ci = c_quad->add_subcommand("certify-ci", "is the arc the full zero set of the forms");
    c_ci->add_option("files", cfg.files, "arc file and forms file")->required()->expected(2);
    c_ci->add_option("--limit", cfg.limit, "maximum number of points to enumerate");
    c_ci->callback([&] { action = [&] { return quadrics_certify(cfg, o); }; });

    auto* c_code = app.add_subcommand("code", "additive codes S_{h,k,q}");
    c_code->require_subcommand(1);
    auto* c_gen = c_code->add_subcommand("gen", "generator matrix over all of Lambda");
    params(c_gen, true);
    c_gen->add_flag("--extend", cfg.extend, "append derivative and infinity coordinates");
    out_opt(c_gen);
    c_gen->callback([&] { action = [&] { return code_gen(cfg, o); }; });
    auto* c_enc = c_code->add_subcommand("encode", "encode a message (one F_q coefficient per line, low degree first)");
    c_enc->add_option("files", cfg.files, "code file and message file")->required()->expected(2);
    c_enc->callback([&] { action = [&] { return code_encode(cfg, o); }; });
    auto* c_dec = c_code->add_subcommand("decode", "erasure-decode a word (one symbol or E per line)");
    c_dec->add_option("files", cfg.files, "code file and word file")->required()->expected(2);
    c_dec->callback([&] { action = [&] { return code_decode(cfg, o); }; });
    auto* c_dist = c_code->add_subcommand("distance", "exhaustive minimum distance");
    c_dist->add_option("file", cfg.files, "code file")->required()->expected(1);
    c_dist->add_option("--budget", cfg.budget, "maximum number of codewords to enumerate")->check(CLI::PositiveNumber);
    c_dist->callback([&] { action = [&] { return code_distance(cfg, o); }; });
    auto* c_fold = c_code->add_subcommand("fold", "the subspaces defined by the columns");
    c_fold->add_option("file", cfg.files, "code file")->required()->expected(1);
    out_opt(c_fold);
    c_fold->callback([&] { action = [&] { return code_fold(cfg, o); }; });

    auto* c_exp = app.add_subcommand("export", "write Lambda or NRC point lists as JSON");
    c_exp->require_subcommand(1);
    auto* c_el = c_exp->add_subcommand("lambda", "Lambda_{h,q}");
    params(c_el, false);
    out_opt(c_el);
    c_el->callback([&] { action = [&] { return export_lambda(cfg, o); }; });
    auto* c_en = c_exp->add_subcommand("nrc", "points of NRC_{N,q}");
    c_en->add_option("--q", cfg.q, "field order")->required();
    c_en->add_option("--N", cfg.N, "ambient vector dimension")->required()->check(CLI::Range(2, 4096));
    out_opt(c_en);
    c_en->callback([&] { action = [&] { return export_nrc(cfg, o); }; });

    auto* c_imp = app.add_subcommand("import", "validate an artifact and write it back canonically");
    c_imp->add_option("file", cfg.files, "artifact file")->required()->expected(1);
    out_opt(c_imp);
    c_imp->callback([&] { action = [&] { return import_cmd(cfg, o); }; });

    std::vector<const char*> argv{"pseudoarc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (!action) {
        err << "error: no command given\n";
        return exit_usage;
    }
    try {
        return action();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed artifact: " << e.what() << '\n';
    }
    return exit_usage;
}

}  // namespace pseudoarc::cli
