// Command-line front end over the wigfluct C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wigfluct/wigfluct.h"

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

struct Failure {
    wf_status status;
    std::string message;
};

void check(wf_status s) {
    if (s != WF_OK) throw Failure{s, wf_last_error()};
}

int exitCodeFor(wf_status s) {
    switch (s) {
        case WF_OK: return 0;
        case WF_ERR_INVALID_ARGUMENT:
        case WF_ERR_CAPABILITY:
        case WF_ERR_DOMAIN: return 2;
        default: return 1;
    }
}

struct PolyDeleter {
    void operator()(wf_poly* p) const { wf_poly_free(p); }
};
struct TableDeleter {
    void operator()(wf_table* t) const { wf_table_free(t); }
};
struct ListDeleter {
    void operator()(wf_list* l) const { wf_list_free(l); }
};
struct LawDeleter {
    void operator()(wf_law* l) const { wf_law_free(l); }
};
using Poly = std::unique_ptr<wf_poly, PolyDeleter>;
using Table = std::unique_ptr<wf_table, TableDeleter>;
using List = std::unique_ptr<wf_list, ListDeleter>;
using Law = std::unique_ptr<wf_law, LawDeleter>;

std::string joinOrders(const std::vector<int>& v, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csvRow(const std::vector<std::string>& fields) {
    std::string s;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) s += ',';
        s += csvField(fields[i]);
    }
    return s;
}

std::string number(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

// Shared options; each subcommand registers the ones it uses.
struct Options {
    std::vector<int> orders;
    int n = 0;
    std::uint64_t bigN = 100;
    int dim = 64;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::string law = "gue";
    Format format = Format::Text;
    int oracleBound = 8;
    std::string dumpGraph;
    unsigned threads = 1;
    int maxOrder = 8;
    int maxR = 4;
    std::string kind;
};

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

void addOrders(CLI::App* app, Options& o, bool required) {
    auto* opt = app->add_option("--orders", o.orders, "circle sizes m1,m2,... (comma separated)")
                    ->delimiter(',')
                    ->check(CLI::Validator(
                        [](std::string& item) -> std::string {
                            std::size_t used = 0;
                            int value = 0;
                            try {
                                value = std::stoi(item, &used);
                            } catch (const std::exception&) {
                                used = 0;
                            }
                            if (used != item.size() || value < 1) return "'" + item + "' is not a positive integer";
                            return {};
                        },
                        "POSITIVE"));
    if (required) opt->required();
}

void addFormat(CLI::App* app, Options& o) {
    app->add_option("--format", o.format, "output format")->transform(CLI::CheckedTransformer(kFormats));
}

void addThreads(CLI::App* app, Options& o) {
    app->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
}

void addDump(CLI::App* app, Options& o) {
    app->add_option("--dump-graph", o.dumpGraph, "write the graph T of the annulus to PATH");
}

void maybeDumpT(const Options& o) {
    if (!o.dumpGraph.empty()) check(wf_dump_t_graph(o.orders.data(), o.orders.size(), o.dumpGraph.c_str()));
}

Json ordersJson(const std::vector<int>& v) { return Json(v); }

// ------------------------------------------------------------------ commands

void runMoments(const Options& o) {
    wf_poly* raw = nullptr;
    check(wf_moment(o.orders.data(), o.orders.size(), o.threads, &raw));
    Poly p(raw);
    maybeDumpT(o);
    const std::string text = wf_poly_text(p.get());
    switch (o.format) {
        case Format::Json: std::cout << Json{{"orders", ordersJson(o.orders)}, {"alpha", text}}.dump() << '\n'; break;
        case Format::Csv:
            std::cout << "orders,alpha\n" << csvRow({joinOrders(o.orders), text}) << '\n';
            break;
        case Format::Text: std::cout << text << '\n'; break;
    }
}

void runCumulants(const Options& o) {
    int maxR = o.maxR, maxOrder = o.maxOrder;
    if (!o.orders.empty()) {
        maxR = static_cast<int>(o.orders.size());
        maxOrder = 0;
        for (int k : o.orders) maxOrder += k;
    }
    wf_table* raw = nullptr;
    check(wf_cumulants(maxR, maxOrder, &raw));
    Table t(raw);

    std::vector<int> wanted = o.orders;
    std::sort(wanted.begin(), wanted.end());
    std::vector<std::pair<std::vector<int>, std::string>> rows;
    for (std::size_t i = 0; i < wf_table_size(t.get()); ++i) {
        const int* ord = nullptr;
        std::size_t r = 0;
        const wf_poly* v = nullptr;
        check(wf_table_entry(t.get(), i, &ord, &r, &v));
        std::vector<int> key(ord, ord + r);
        if (!wanted.empty() && key != wanted) continue;
        rows.emplace_back(std::move(key), wf_poly_text(v));
    }

    switch (o.format) {
        case Format::Json: {
            if (!wanted.empty()) {
                std::cout << Json{{"orders", ordersJson(rows.at(0).first)}, {"kappa", rows.at(0).second}}.dump() << '\n';
            } else {
                Json arr = Json::array();
                for (const auto& [k, v] : rows) arr.push_back(Json{{"orders", ordersJson(k)}, {"kappa", v}});
                std::cout << Json{{"cumulants", arr}}.dump() << '\n';
            }
            break;
        }
        case Format::Csv:
            std::cout << "orders,kappa\n";
            for (const auto& [k, v] : rows) std::cout << csvRow({joinOrders(k), v}) << '\n';
            break;
        case Format::Text:
            for (const auto& [k, v] : rows) std::cout << "kappa(" << joinOrders(k) << ") = " << v << '\n';
            break;
    }
}

void runEnumerate(const Options& o) {
    static const std::map<std::string, wf_enum_kind> kinds{
        {"nc", WF_ENUM_NC}, {"nc2", WF_ENUM_NC2}, {"psnc2lf", WF_ENUM_PSNC2LF}, {"an", WF_ENUM_AN}};
    const wf_enum_kind kind = kinds.at(o.kind);
    if (kind != WF_ENUM_AN && o.orders.empty()) throw Failure{WF_ERR_INVALID_ARGUMENT, "--orders is required"};
    if (kind == WF_ENUM_AN && o.n < 1) throw Failure{WF_ERR_INVALID_ARGUMENT, "--n is required for 'an'"};
    wf_list* raw = nullptr;
    check(wf_enumerate(kind, o.orders.data(), o.orders.size(), o.n, &raw));
    List l(raw);
    if (!o.dumpGraph.empty()) {
        if (kind == WF_ENUM_PSNC2LF)
            check(wf_dump_gamma_graphs(o.orders.data(), o.orders.size(), o.dumpGraph.c_str()));
        else if (kind != WF_ENUM_AN)
            maybeDumpT(o);
    }
    std::vector<std::string> items;
    for (std::size_t i = 0; i < wf_list_size(l.get()); ++i) items.emplace_back(wf_list_item(l.get(), i));

    switch (o.format) {
        case Format::Json: {
            Json j{{"kind", o.kind}};
            if (kind == WF_ENUM_AN)
                j["n"] = o.n;
            else
                j["orders"] = ordersJson(o.orders);
            j["count"] = items.size();
            j["items"] = items;
            std::cout << j.dump() << '\n';
            break;
        }
        case Format::Csv:
            std::cout << "item\n";
            for (const auto& s : items) std::cout << csvField(s) << '\n';
            break;
        case Format::Text:
            std::cout << items.size() << '\n';
            for (const auto& s : items) std::cout << s << '\n';
            break;
    }
}

bool runOracle(const Options& o) {
    wf_poly *a = nullptr, *b = nullptr;
    check(wf_moment_oracle(o.orders.data(), o.orders.size(), o.oracleBound, o.threads, &b));
    Poly oracle(b);
    check(wf_moment(o.orders.data(), o.orders.size(), o.threads, &a));
    Poly theorem(a);
    maybeDumpT(o);
    const bool pass = wf_poly_equal(theorem.get(), oracle.get());
    const std::string status = pass ? "PASS" : "FAIL";
    switch (o.format) {
        case Format::Json:
            std::cout << Json{{"orders", ordersJson(o.orders)},
                              {"theorem1", wf_poly_text(theorem.get())},
                              {"oracle", wf_poly_text(oracle.get())},
                              {"status", status}}
                             .dump()
                      << '\n';
            break;
        case Format::Csv:
            std::cout << "orders,theorem1,oracle,status\n"
                      << csvRow({joinOrders(o.orders), wf_poly_text(theorem.get()), wf_poly_text(oracle.get()), status})
                      << '\n';
            break;
        case Format::Text:
            std::cout << "theorem1: " << wf_poly_text(theorem.get()) << '\n'
                      << "oracle:   " << wf_poly_text(oracle.get()) << '\n'
                      << status << '\n';
            break;
    }
    return pass;
}

void runMC(const Options& o) {
    wf_law* rawLaw = nullptr;
    check(wf_law_parse(o.law.c_str(), &rawLaw));
    Law law(rawLaw);
    wf_mc_result res{};
    check(wf_mc(law.get(), o.dim, o.orders.data(), o.orders.size(), o.samples, o.seed, o.threads, &res));

    wf_poly* raw = nullptr;
    check(wf_moment(o.orders.data(), o.orders.size(), o.threads, &raw));
    Poly exactPoly(raw);
    double exact = 0.0;
    check(wf_law_evaluate(law.get(), exactPoly.get(), &exact));
    const double z = res.standard_error > 0 ? (res.estimate - exact) / res.standard_error : 0.0;

    switch (o.format) {
        case Format::Json:
            std::cout << Json{{"orders", ordersJson(o.orders)},
                              {"law", o.law},
                              {"N", o.dim},
                              {"samples", o.samples},
                              {"seed", o.seed},
                              {"estimate", res.estimate},
                              {"stderr", res.standard_error},
                              {"exactGUEorLawValue", exact},
                              {"zscore", z}}
                             .dump()
                      << '\n';
            break;
        case Format::Csv:
            std::cout << "orders,law,N,samples,seed,estimate,stderr,exactGUEorLawValue,zscore\n"
                      << csvRow({joinOrders(o.orders), o.law, std::to_string(o.dim), std::to_string(o.samples),
                                 std::to_string(o.seed), number(res.estimate), number(res.standard_error),
                                 number(exact), number(z)})
                      << '\n';
            break;
        case Format::Text:
            std::cout << "estimate " << number(res.estimate) << " +- " << number(res.standard_error) << "  exact "
                      << number(exact) << "  z " << number(z) << '\n';
            break;
    }
}

void runFiniteN(const Options& o) {
    wf_poly* raw = nullptr;
    check(wf_finite_n(o.orders.data(), o.orders.size(), o.bigN, o.oracleBound, &raw));
    Poly p(raw);
    maybeDumpT(o);
    const std::string text = wf_poly_text(p.get());
    switch (o.format) {
        case Format::Json:
            std::cout << Json{{"orders", ordersJson(o.orders)}, {"N", o.bigN}, {"alpha", text}}.dump() << '\n';
            break;
        case Format::Csv:
            std::cout << "orders,N,alpha\n" << csvRow({joinOrders(o.orders), std::to_string(o.bigN), text}) << '\n';
            break;
        case Format::Text: std::cout << text << '\n'; break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fluctuation moments and higher-order free cumulants of complex Wigner matrices"};
    app.require_subcommand(1);
    Options o;

    auto* moments = app.add_subcommand("moments", "fluctuation moment alpha as a polynomial in b2, b4, ...");
    addOrders(moments, o, true);
    addFormat(moments, o);
    addThreads(moments, o);
    addDump(moments, o);

    auto* cumulants = app.add_subcommand("cumulants", "higher-order free cumulants (r <= 4)");
    addOrders(cumulants, o, false);
    cumulants->add_option("--max-order", o.maxOrder, "largest total order in the table")->check(CLI::PositiveNumber);
    cumulants->add_option("--max-r", o.maxR, "largest number of circles in the table")->check(CLI::PositiveNumber);
    addFormat(cumulants, o);

    auto* enumerate = app.add_subcommand("enumerate", "list NC permutations, NC pairings, PS_NC2 loop-free or A_n");
    enumerate->add_option("kind", o.kind, "nc | nc2 | psnc2lf | an")
        ->required()
        ->check(CLI::IsMember({"nc", "nc2", "psnc2lf", "an"}));
    addOrders(enumerate, o, false);
    enumerate->add_option("--n", o.n, "n for the obstruction set A_n");
    addFormat(enumerate, o);
    enumerate->add_option("--dump-graph", o.dumpGraph, "write T (or every Gamma graph for psnc2lf) to PATH");

    auto* oracle = app.add_subcommand("oracle", "compare the pseudo-cumulant sum with the brute-force oracle");
    addOrders(oracle, o, true);
    oracle->add_option("--oracle-bound", o.oracleBound, "largest total order the oracle accepts");
    addFormat(oracle, o);
    addThreads(oracle, o);
    addDump(oracle, o);

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of N^{r-2} k_r(Tr X^m1, ...)");
    addOrders(mc, o, true);
    mc->add_option("--law", o.law, "gue | fixed-modulus:c | two-point:c1,c2,p");
    mc->add_option("--dim", o.dim, "matrix size N")->check(CLI::PositiveNumber);
    mc->add_option("--samples", o.samples, "number of sampled matrices");
    mc->add_option("--seed", o.seed, "64-bit seed");
    addFormat(mc, o);
    addThreads(mc, o);

    auto* finite = app.add_subcommand("finite-n", "exact value at finite N");
    addOrders(finite, o, true);
    finite->add_option("--n", o.bigN, "matrix size N")->check(CLI::PositiveNumber);
    finite->add_option("--oracle-bound", o.oracleBound, "largest total order accepted");
    addFormat(finite, o);
    addDump(finite, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (moments->parsed()) runMoments(o);
        if (cumulants->parsed()) runCumulants(o);
        if (enumerate->parsed()) runEnumerate(o);
        if (oracle->parsed() && !runOracle(o)) return 1;
        if (mc->parsed()) runMC(o);
        if (finite->parsed()) runFiniteN(o);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return exitCodeFor(f.status);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
