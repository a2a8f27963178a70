#include "starlab.h"

#include <cstring>
#include <string>

#include "starlab/claw.hpp"
#include "starlab/core_ops.hpp"
#include "starlab/labeled.hpp"
#include "starlab/report.hpp"
#include "starlab/search.hpp"
#include "starlab/suites.hpp"

struct starlab_family {
    starlab::Family value;
};
struct starlab_graph {
    starlab::Graph value;
};
struct starlab_weights {
    starlab::WeightVector value;
};
struct starlab_verdict {
    starlab::SearchVerdict value;
};
struct starlab_report {
    starlab::SuiteReport value;
};

namespace {

thread_local std::string g_last_error;

starlab_status map_error(const starlab::Error& e) {
    g_last_error = e.what();
    switch (e.kind()) {
    case starlab::ErrorKind::domain: return STARLAB_ERR_DOMAIN;
    case starlab::ErrorKind::size_limit: return STARLAB_ERR_LIMIT;
    case starlab::ErrorKind::parse: return STARLAB_ERR_PARSE;
    case starlab::ErrorKind::overflow: return STARLAB_ERR_OVERFLOW;
    }
    return STARLAB_ERR_INTERNAL;
}

template <typename Fn>
starlab_status guarded(Fn&& fn) {
    try {
        fn();
        return STARLAB_OK;
    } catch (const starlab::Error& e) {
        return map_error(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return STARLAB_ERR_INTERNAL;
    }
}

starlab_status null_arg(const char* what) {
    g_last_error = std::string(what) + " must not be NULL";
    return STARLAB_ERR_NULL;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

starlab::ReportFormat parse_format_arg(const char* format) {
    return starlab::parse_format(format == nullptr ? "json" : format);
}

} // namespace

extern "C" {

const char* starlab_status_name(starlab_status status) {
    switch (status) {
    case STARLAB_OK: return "ok";
    case STARLAB_ERR_DOMAIN: return "domain";
    case STARLAB_ERR_LIMIT: return "size-limit";
    case STARLAB_ERR_PARSE: return "parse";
    case STARLAB_ERR_OVERFLOW: return "overflow";
    case STARLAB_ERR_NULL: return "null-argument";
    case STARLAB_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* starlab_last_error(void) { return g_last_error.c_str(); }

void starlab_string_free(char* s) { delete[] s; }

/* ---- families ------------------------------------------------------- */

starlab_status starlab_power_set(int n, starlab_family** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_family{starlab::power_set(n)}; });
}

starlab_status starlab_k_subsets(int n, int r, starlab_family** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_family{starlab::k_subsets(n, r)}; });
}

starlab_status starlab_family_from_text(const char* text, starlab_family** out) {
    if (!text) return null_arg("text");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_family{starlab::Family::parse_text(text)}; });
}

starlab_status starlab_family_to_text(const starlab_family* f, char** out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] { *out = dup_string(f->value.to_text()); });
}

void starlab_family_free(starlab_family* f) { delete f; }

starlab_status starlab_family_ground_size(const starlab_family* f, int* out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    *out = f->value.ground_size();
    return STARLAB_OK;
}

starlab_status starlab_family_size(const starlab_family* f, size_t* out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    *out = f->value.size();
    return STARLAB_OK;
}

starlab_status starlab_family_member(const starlab_family* f, size_t index, uint64_t* bits) {
    if (!f) return null_arg("family");
    if (!bits) return null_arg("bits");
    if (index >= f->value.size()) {
        g_last_error = "member index out of range";
        return STARLAB_ERR_DOMAIN;
    }
    *bits = f->value.bits_at(index);
    return STARLAB_OK;
}

starlab_status starlab_family_slice(const starlab_family* f, int r, starlab_family** out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_family{starlab::slice(f->value, r)}; });
}

starlab_status starlab_family_star(const starlab_family* f, int element, starlab_family** out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_family{starlab::star(f->value, element)}; });
}

starlab_status starlab_family_is_intersecting(const starlab_family* f, int* out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] { *out = starlab::is_intersecting(f->value) ? 1 : 0; });
}

starlab_status starlab_families_cross_intersecting(const starlab_family* a,
                                                   const starlab_family* b, int* out) {
    if (!a || !b) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] { *out = starlab::are_cross_intersecting(a->value, b->value) ? 1 : 0; });
}

/* ---- labeled universe ------------------------------------------------ */

starlab_status starlab_lnk_enumerate(int n, int k, int r, starlab_family** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new starlab_family{starlab::enumerate_lnk(starlab::LabeledUniverse(n, k), r)};
    });
}

starlab_status starlab_lnk_delta(int n, int k, int i, int j, uint64_t bits, uint64_t* out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        starlab::LabeledUniverse u(n, k);
        *out = starlab::delta(u, i, j, starlab::SetMask(bits, u.ground())).bits;
    });
}

starlab_status starlab_lnk_compress(int n, int k, int i, int j, const starlab_family* f,
                                    starlab_family** out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new starlab_family{
            starlab::compress_family(starlab::LabeledUniverse(n, k), i, j, f->value)};
    });
}

starlab_status starlab_lnk_full_compress(int n, int k, const starlab_family* f,
                                         starlab_family** out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new starlab_family{starlab::full_compress(starlab::LabeledUniverse(n, k), f->value)};
    });
}

starlab_status starlab_lnk_trace(int n, int k, const starlab_family* f, starlab_family** out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new starlab_family{starlab::trace_xn(starlab::LabeledUniverse(n, k), f->value)};
    });
}

starlab_status starlab_labeled_to_text(int n, int k, const starlab_family* f, char** out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = dup_string(starlab::labeled_to_text(starlab::LabeledUniverse(n, k), f->value));
    });
}

starlab_status starlab_labeled_from_text(const char* text, int* n, int* k, starlab_family** out) {
    if (!text) return null_arg("text");
    if (!out) return null_arg("out");
    return guarded([&] {
        auto [u, fam] = starlab::labeled_parse_text(text);
        if (n) *n = u.n;
        if (k) *k = u.k;
        *out = new starlab_family{std::move(fam)};
    });
}

/* ---- graphs ----------------------------------------------------------- */

starlab_status starlab_graph_from_text(const char* text, starlab_graph** out) {
    if (!text) return null_arg("text");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_graph{starlab::Graph::parse_text(text)}; });
}

starlab_status starlab_graph_to_text(const starlab_graph* g, char** out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    return guarded([&] { *out = dup_string(g->value.to_text()); });
}

void starlab_graph_free(starlab_graph* g) { delete g; }

starlab_status starlab_build_tn(int n, starlab_graph** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_graph{starlab::build_tn(n).first}; });
}

starlab_status starlab_graph_vertex_count(const starlab_graph* g, int* out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    *out = g->value.vertex_count;
    return STARLAB_OK;
}

starlab_status starlab_graph_neighbors(const starlab_graph* g, int vertex, uint64_t* out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    if (vertex < 1 || vertex > g->value.vertex_count) {
        g_last_error = "vertex out of range";
        return STARLAB_ERR_DOMAIN;
    }
    *out = g->value.neighbors(vertex);
    return STARLAB_OK;
}

starlab_status starlab_graph_independent_sets(const starlab_graph* g, int r,
                                              starlab_family** out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_family{starlab::independent_sets(g->value, r)}; });
}

starlab_status starlab_graph_mu(const starlab_graph* g, int* out) {
    if (!g) return null_arg("graph");
    if (!out) return null_arg("out");
    return guarded([&] { *out = starlab::mu(g->value); });
}

starlab_status starlab_itn_enumerate(int n, int r, starlab_family** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_family{starlab::enumerate_itn(n, r)}; });
}

starlab_status starlab_gamma_compress(int n, const starlab_family* f, starlab_family** out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new starlab_family{starlab::gamma_compress(starlab::ClawLayout{n}, f->value)};
    });
}

starlab_status starlab_split_x0(int n, const starlab_family* f, starlab_family** h0,
                                starlab_family** h1, starlab_family** h1prime) {
    if (!f) return null_arg("family");
    if (!h0 || !h1 || !h1prime) return null_arg("out");
    return guarded([&] {
        starlab::SplitX0 parts = starlab::split_x0(starlab::ClawLayout{n}, f->value);
        *h0 = new starlab_family{std::move(parts.h0)};
        *h1 = new starlab_family{std::move(parts.h1)};
        *h1prime = new starlab_family{std::move(parts.h1prime)};
    });
}

starlab_status starlab_claw_family_to_text(int n, const starlab_family* f, char** out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = dup_string(starlab::claw_family_to_text(starlab::ClawLayout{n}, f->value));
    });
}

starlab_status starlab_claw_family_from_text(const char* text, int* n, starlab_family** out) {
    if (!text) return null_arg("text");
    if (!out) return null_arg("out");
    return guarded([&] {
        auto [layout, fam] = starlab::claw_family_parse_text(text);
        if (n) *n = layout.n;
        *out = new starlab_family{std::move(fam)};
    });
}

/* ---- weights ----------------------------------------------------------- */

starlab_status starlab_weights_create(int n, const char* const* entries, starlab_weights** out) {
    if (!entries) return null_arg("entries");
    if (!out) return null_arg("out");
    return guarded([&] {
        std::vector<starlab::Rational> w;
        for (int i = 0; i <= n; ++i) {
            if (!entries[i]) throw starlab::DomainError("weights_create: NULL entry");
            w.push_back(starlab::Rational::parse(entries[i]));
        }
        *out = new starlab_weights{starlab::WeightVector(n, std::move(w))};
    });
}

starlab_status starlab_weights_from_text(const char* text, starlab_weights** out) {
    if (!text) return null_arg("text");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_weights{starlab::WeightVector::parse_text(text)}; });
}

starlab_status starlab_weights_to_text(const starlab_weights* w, char** out) {
    if (!w) return null_arg("weights");
    if (!out) return null_arg("out");
    return guarded([&] { *out = dup_string(w->value.to_text()); });
}

void starlab_weights_free(starlab_weights* w) { delete w; }

starlab_status starlab_weights_n(const starlab_weights* w, int* out) {
    if (!w) return null_arg("weights");
    if (!out) return null_arg("out");
    *out = w->value.n();
    return STARLAB_OK;
}

starlab_status starlab_weights_entry(const starlab_weights* w, int i, char** out) {
    if (!w) return null_arg("weights");
    if (!out) return null_arg("out");
    if (i < 0 || i > w->value.n()) {
        g_last_error = "weight index out of range";
        return STARLAB_ERR_DOMAIN;
    }
    return guarded([&] { *out = dup_string(w->value[i].to_string()); });
}

starlab_status starlab_check_thm2_conditions(const starlab_weights* a, const starlab_weights* b,
                                             int* out) {
    if (!a || !b) return null_arg("weights");
    if (!out) return null_arg("out");
    return guarded([&] { *out = starlab::check_thm2_conditions(a->value, b->value) ? 1 : 0; });
}

starlab_status starlab_weighted_sum(const starlab_family* f, const starlab_weights* w,
                                    char** out) {
    if (!f) return null_arg("family");
    if (!w) return null_arg("weights");
    if (!out) return null_arg("out");
    return guarded([&] { *out = dup_string(starlab::weighted_sum(f->value, w->value).to_string()); });
}

starlab_status starlab_star_rhs(const starlab_weights* a, const starlab_weights* b, char** out) {
    if (!a || !b) return null_arg("weights");
    if (!out) return null_arg("out");
    return guarded([&] { *out = dup_string(starlab::star_rhs(a->value, b->value).to_string()); });
}

starlab_status starlab_proof_weights(int n, int r, starlab_weights** a, starlab_weights** b) {
    if (!a || !b) return null_arg("out");
    return guarded([&] {
        auto [wa, wb] = starlab::proof_weights(n, r);
        *a = new starlab_weights{std::move(wa)};
        *b = new starlab_weights{std::move(wb)};
    });
}

/* ---- searches ----------------------------------------------------------- */

starlab_status starlab_max_intersecting(const starlab_family* f, starlab_verdict** out) {
    if (!f) return null_arg("family");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_verdict{starlab::max_intersecting(f->value)}; });
}

starlab_status starlab_largest_star(const starlab_family* f, int* element, size_t* size) {
    if (!f) return null_arg("family");
    if (!element || !size) return null_arg("out");
    return guarded([&] {
        auto [e, s] = starlab::largest_star(f->value);
        *element = e;
        *size = s;
    });
}

starlab_status starlab_fjt_verdict(int n, int r, starlab_verdict** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new starlab_verdict{starlab::fjt_verdict(n, r)}; });
}

starlab_status starlab_max_weighted_pair(int n, const starlab_weights* a,
                                         const starlab_weights* b, uint64_t seed, int trials,
                                         starlab_verdict** out) {
    if (!a || !b) return null_arg("weights");
    if (!out) return null_arg("out");
    return guarded([&] {
        starlab::PairSearchMode mode;
        if (trials < 0)
            mode = starlab::ExhaustiveMode{};
        else
            mode = starlab::SampledMode{seed, trials};
        *out = new starlab_verdict{starlab::max_weighted_pair(n, a->value, b->value, mode)};
    });
}

void starlab_verdict_free(starlab_verdict* v) { delete v; }

starlab_status starlab_verdict_optimum(const starlab_verdict* v, char** out) {
    if (!v) return null_arg("verdict");
    if (!out) return null_arg("out");
    return guarded([&] { *out = dup_string(v->value.optimum.to_string()); });
}

starlab_status starlab_verdict_star_property(const starlab_verdict* v, int* holds) {
    if (!v) return null_arg("verdict");
    if (!holds) return null_arg("out");
    *holds = v->value.star_property ? 1 : 0;
    return STARLAB_OK;
}

starlab_status starlab_verdict_largest_star(const starlab_verdict* v, int* element, char** value) {
    if (!v) return null_arg("verdict");
    if (!element || !value) return null_arg("out");
    return guarded([&] {
        *element = v->value.star_element;
        *value = dup_string(v->value.largest_star_value.to_string());
    });
}

starlab_status starlab_verdict_nodes(const starlab_verdict* v, uint64_t* out) {
    if (!v) return null_arg("verdict");
    if (!out) return null_arg("out");
    *out = v->value.nodes_explored;
    return STARLAB_OK;
}

starlab_status starlab_verdict_witness(const starlab_verdict* v, starlab_family** out) {
    if (!v) return null_arg("verdict");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new starlab_family{v->value.witness_pair ? v->value.witness_pair->first
                                                        : v->value.witness};
    });
}

starlab_status starlab_verdict_render(const starlab_verdict* v, const char* format, char** out) {
    if (!v) return null_arg("verdict");
    if (!out) return null_arg("out");
    return guarded(
        [&] { *out = dup_string(starlab::render_verdict(v->value, parse_format_arg(format))); });
}

starlab_status starlab_thm2_proof_trace(const starlab_family* a_family,
                                        const starlab_family* b_family, const starlab_weights* a,
                                        const starlab_weights* b, const char* format, int* pass,
                                        char** out) {
    if (!a_family || !b_family) return null_arg("family");
    if (!a || !b) return null_arg("weights");
    if (!pass || !out) return null_arg("out");
    return guarded([&] {
        starlab::ProofTrace trace =
            starlab::thm2_proof_trace(a_family->value, b_family->value, a->value, b->value);
        *pass = trace.pass ? 1 : 0;
        // Render through the suite row machinery for a stable layout.
        starlab::SuiteReport rep;
        rep.suite = "thm2-proof-trace";
        rep.params["n"] = std::to_string(trace.n);
        for (const auto& row : trace.rows) {
            starlab::SuiteRow r;
            r.check = "pair-bound";
            r.n = trace.n;
            r.r = row.r;
            r.expected = "c_r + c_{n-r} <= " + row.pair_rhs.to_string();
            r.computed = row.pair_lhs.to_string();
            r.pass = row.pass;
            if (row.half_case)
                r.note = "half-case c=" + row.half_lhs.to_string() + " cap=" + row.half_rhs.to_string();
            rep.add(std::move(r));
        }
        starlab::SuiteRow total;
        total.check = "telescoped-total";
        total.n = trace.n;
        total.expected = "<= " + trace.rhs.to_string();
        total.computed = trace.total.to_string();
        total.pass = trace.pass;
        rep.add(std::move(total));
        *out = dup_string(starlab::render_suite(rep, parse_format_arg(format)));
    });
}

starlab_status starlab_thm5_case2_report(int n, int r, const starlab_family* e,
                                         const char* format, int* pass, char** out) {
    if (!e) return null_arg("family");
    if (!pass || !out) return null_arg("out");
    return guarded([&] {
        starlab::Case2Report rep = starlab::thm5_case2_bound(n, r, e->value);
        *pass = rep.pass ? 1 : 0;
        *out = dup_string(starlab::render_case2(rep, parse_format_arg(format)));
    });
}

/* ---- suites ----------------------------------------------------------- */

starlab_status starlab_suite_run(const char* name, int n_max, uint64_t seed, int trials,
                                 starlab_report** out) {
    if (!name) return null_arg("name");
    if (!out) return null_arg("out");
    return guarded([&] {
        starlab::SuiteParams params;
        params.n_max = n_max;
        params.seed = seed;
        params.trials = trials;
        *out = new starlab_report{starlab::run_suite(name, params)};
    });
}

void starlab_report_free(starlab_report* r) { delete r; }

starlab_status starlab_report_pass(const starlab_report* r, int* out) {
    if (!r) return null_arg("report");
    if (!out) return null_arg("out");
    *out = r->value.pass ? 1 : 0;
    return STARLAB_OK;
}

starlab_status starlab_report_render(const starlab_report* r, const char* format, char** out) {
    if (!r) return null_arg("report");
    if (!out) return null_arg("out");
    return guarded(
        [&] { *out = dup_string(starlab::render_suite(r->value, parse_format_arg(format))); });
}

starlab_status starlab_suite_list(char** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        std::string text;
        for (const auto& [name, invariant] : starlab::suite_catalog())
            text += name + ": " + invariant + "\n";
        *out = dup_string(text);
    });
}

starlab_status starlab_render_enumeration(const char* target, int n, int r, int k,
                                          const char* format, char** out) {
    if (!target) return null_arg("target");
    if (!out) return null_arg("out");
    return guarded([&] {
        std::string t = target;
        starlab::Family family;
        if (t == "powerset") {
            family = starlab::power_set(n);
        } else if (t == "knr") {
            family = starlab::k_subsets(n, r);
        } else if (t == "lnk") {
            family = starlab::enumerate_lnk(starlab::LabeledUniverse(n, k), r);
        } else if (t == "itn") {
            family = starlab::enumerate_itn(n, r);
        } else {
            throw starlab::DomainError("unknown target '" + t +
                                       "' (expected powerset, knr, lnk or itn)");
        }
        *out = dup_string(starlab::render_family(family, t, n, r, k, parse_format_arg(format)));
    });
}

} /* extern "C" */
