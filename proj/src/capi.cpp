#include "wigfluct/wigfluct.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wigfluct/errors.hpp"
#include "wigfluct/formulas.hpp"
#include "wigfluct/graph.hpp"
#include "wigfluct/montecarlo.hpp"
#include "wigfluct/obstruction.hpp"

using namespace wigfluct;

struct wf_poly {
    BetaPoly value;
    std::string text;
    std::string gue;
    std::vector<std::string> coefficients;
    std::vector<std::vector<int>> indices;

    explicit wf_poly(BetaPoly p) : value(std::move(p)), text(value.toString()), gue(toString(gueSpecialize(value))) {
        for (const auto& [m, c] : value.terms()) {
            coefficients.push_back(toString(c));
            indices.push_back(m);
        }
    }
};

struct wf_table {
    std::vector<std::vector<int>> orders;
    std::vector<wf_poly> values;
};

struct wf_list {
    std::vector<std::string> items;
};

struct wf_law {
    EntryLaw law;
};

namespace {

thread_local std::string lastError;

template <class F>
wf_status guarded(F&& f) {
    lastError.clear();
    try {
        f();
        return WF_OK;
    } catch (const CapabilityError& e) {
        lastError = e.what();
        return WF_ERR_CAPABILITY;
    } catch (const std::domain_error& e) {
        lastError = e.what();
        return WF_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        lastError = e.what();
        return WF_ERR_INVALID_ARGUMENT;
    } catch (const std::out_of_range& e) {
        lastError = e.what();
        return WF_ERR_INVALID_ARGUMENT;
    } catch (const std::ios_base::failure& e) {
        lastError = e.what();
        return WF_ERR_IO;
    } catch (const std::exception& e) {
        lastError = e.what();
        return WF_ERR_INTERNAL;
    } catch (...) {
        lastError = "unknown error";
        return WF_ERR_INTERNAL;
    }
}

MomentIndex toIndex(const int* orders, size_t r) {
    if (!orders || r == 0) throw std::invalid_argument("orders must be a nonempty list");
    return MomentIndex(orders, orders + r);
}

template <class T>
void requireOut(T* out) {
    if (!out) throw std::invalid_argument("null output pointer");
}

std::ofstream openForWrite(const char* path) {
    if (!path) throw std::invalid_argument("null path");
    std::ofstream os(path);
    if (!os) throw std::ios_base::failure(std::string("cannot open ") + path + " for writing");
    return os;
}

int totalOrder(const std::vector<int>& v) {
    int m = 0;
    for (int k : v) m += k;
    return m;
}

}  // namespace

extern "C" {

const char* wf_last_error(void) { return lastError.c_str(); }
const char* wf_version(void) { return "1.0.0"; }

wf_status wf_poly_parse(const char* text, wf_poly** out) {
    return guarded([&] {
        requireOut(out);
        if (!text) throw std::invalid_argument("null text");
        *out = new wf_poly(BetaPoly::parse(text));
    });
}

void wf_poly_free(wf_poly* p) { delete p; }
const char* wf_poly_text(const wf_poly* p) { return p ? p->text.c_str() : ""; }
size_t wf_poly_term_count(const wf_poly* p) { return p ? p->coefficients.size() : 0; }
const char* wf_poly_gue_text(const wf_poly* p) { return p ? p->gue.c_str() : ""; }

wf_status wf_poly_term(const wf_poly* p, size_t i, const char** coefficient, const int** indices, size_t* degree) {
    return guarded([&] {
        if (!p || i >= p->coefficients.size()) throw std::out_of_range("term index out of range");
        if (coefficient) *coefficient = p->coefficients[i].c_str();
        if (indices) *indices = p->indices[i].data();
        if (degree) *degree = p->indices[i].size();
    });
}

wf_status wf_poly_evaluate(const wf_poly* p, const int* indices, const double* values, size_t count, double* out) {
    return guarded([&] {
        requireOut(out);
        if (!p) throw std::invalid_argument("null polynomial");
        std::map<int, double> assignment;
        for (size_t k = 0; k < count; ++k) assignment[indices[k]] = values[k];
        *out = evaluate(p->value, assignment);
    });
}

int wf_poly_equal(const wf_poly* a, const wf_poly* b) { return a && b && a->value == b->value; }

wf_status wf_moment(const int* orders, size_t r, unsigned threads, wf_poly** out) {
    return guarded([&] {
        requireOut(out);
        *out = new wf_poly(momentTheorem1(toIndex(orders, r), threads));
    });
}

wf_status wf_moment_oracle(const int* orders, size_t r, int bound, unsigned threads, wf_poly** out) {
    return guarded([&] {
        requireOut(out);
        *out = new wf_poly(momentOracle(toIndex(orders, r), bound, threads));
    });
}

wf_status wf_finite_n(const int* orders, size_t r, uint64_t n, int bound, wf_poly** out) {
    return guarded([&] {
        requireOut(out);
        *out = new wf_poly(finiteNExpansion(toIndex(orders, r), n, bound));
    });
}

wf_status wf_cumulants(int max_r, int max_order, wf_table** out) {
    return guarded([&] {
        requireOut(out);
        const CumulantTable table = freeCumulants(max_r, max_order);
        std::vector<std::vector<int>> keys;
        for (const auto& [k, v] : table.entries) keys.push_back(k);
        std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
            if (totalOrder(a) != totalOrder(b)) return totalOrder(a) < totalOrder(b);
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        auto t = std::make_unique<wf_table>();
        for (const auto& k : keys) {
            t->orders.push_back(k);
            t->values.emplace_back(table.entries.at(k));
        }
        *out = t.release();
    });
}

size_t wf_table_size(const wf_table* t) { return t ? t->orders.size() : 0; }

wf_status wf_table_entry(const wf_table* t, size_t i, const int** orders, size_t* r, const wf_poly** value) {
    return guarded([&] {
        if (!t || i >= t->orders.size()) throw std::out_of_range("table index out of range");
        if (orders) *orders = t->orders[i].data();
        if (r) *r = t->orders[i].size();
        if (value) *value = &t->values[i];
    });
}

void wf_table_free(wf_table* t) { delete t; }

wf_status wf_enumerate(wf_enum_kind kind, const int* orders, size_t r, int n, wf_list** out) {
    return guarded([&] {
        requireOut(out);
        auto l = std::make_unique<wf_list>();
        switch (kind) {
            case WF_ENUM_NC: {
                const AnnulusShape shape(toIndex(orders, r));
                if (shape.m() > 10) throw CapabilityError("enumerate nc scans all of S_m and is limited to m <= 10");
                const Permutation gamma = gammaOf(shape);
                PermutationStream ps(shape.m());
                while (auto p = ps.next())
                    if (isNonCrossingRel(*p, gamma) == NCClass::NC) l->items.push_back(p->toString());
                break;
            }
            case WF_ENUM_NC2:
                for (const auto& s : enumerateNC2(AnnulusShape(toIndex(orders, r)))) l->items.push_back(s.toString());
                break;
            case WF_ENUM_PSNC2LF:
                for (const auto& pp : enumeratePS_NC2LoopFree(AnnulusShape(toIndex(orders, r))))
                    l->items.push_back(pp.part.toString() + " " + pp.perm.toString());
                break;
            case WF_ENUM_AN:
                for (const auto& tau : obstructionSet(n)) l->items.push_back(tau.toString());
                break;
            default:
                throw std::invalid_argument("unknown enumeration kind");
        }
        *out = l.release();
    });
}

size_t wf_list_size(const wf_list* l) { return l ? l->items.size() : 0; }
const char* wf_list_item(const wf_list* l, size_t i) { return (l && i < l->items.size()) ? l->items[i].c_str() : nullptr; }
void wf_list_free(wf_list* l) { delete l; }

wf_status wf_dump_t_graph(const int* orders, size_t r, const char* path) {
    return guarded([&] {
        const AnnulusShape shape(toIndex(orders, r));
        auto os = openForWrite(path);
        dumpGraph(os, buildT(shape));
    });
}

wf_status wf_dump_gamma_graphs(const int* orders, size_t r, const char* path) {
    return guarded([&] {
        const AnnulusShape shape(toIndex(orders, r));
        auto os = openForWrite(path);
        for (const auto& pp : enumeratePS_NC2LoopFree(shape)) dumpGraph(os, gammaGraph(pp));
    });
}

wf_status wf_law_parse(const char* spec, wf_law** out) {
    return guarded([&] {
        requireOut(out);
        if (!spec) throw std::invalid_argument("null law");
        *out = new wf_law{EntryLaw::parse(spec)};
    });
}

void wf_law_free(wf_law* law) { delete law; }

wf_status wf_law_beta(const wf_law* law, int n, double* out) {
    return guarded([&] {
        requireOut(out);
        if (!law) throw std::invalid_argument("null law");
        *out = betaOf(law->law, n);
    });
}

wf_status wf_law_evaluate(const wf_law* law, const wf_poly* p, double* out) {
    return guarded([&] {
        requireOut(out);
        if (!law || !p) throw std::invalid_argument("null argument");
        for (const auto& [m, c] : p->value.terms())
            for (int k : m)
                if (k > 8) throw CapabilityError("law values are only available up to b8");
        *out = evaluate(p->value, betaValues(law->law));
    });
}

wf_status wf_mc(const wf_law* law, int dim, const int* orders, size_t r, uint64_t samples, uint64_t seed,
                unsigned threads, wf_mc_result* out) {
    return guarded([&] {
        requireOut(out);
        if (!law) throw std::invalid_argument("null law");
        const Fluctuation f = empiricalFluctuation(law->law, dim, toIndex(orders, r), samples, seed, threads);
        *out = {f.estimate, f.standardError, f.batches};
    });
}

}  // extern "C"
