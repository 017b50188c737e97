// pdc: pipe dream crystals on the command line.
//
// Commands: schubert, pipedreams, crystal, decompose, rfc, phi, verify.
// Exit codes: 0 success, 1 usage or bad input, 2 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <pdcrystal/crystal.hpp>
#include <pdcrystal/keylab.hpp>
#include <pdcrystal/permutation.hpp>
#include <pdcrystal/pipe_dream.hpp>
#include <pdcrystal/polynomial.hpp>
#include <pdcrystal/rfc.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace pdcrystal;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

SparsePolynomial schubert_by_method(const Permutation& w, const std::string& method) {
    if (method == "pipedreams") return schubert_via_pipe_dreams(w);
    if (method == "compatible") return schubert_via_compatible_sequences(w);
    if (method == "rfc") return schubert_via_rfc(w);
    if (method == "divdiff") return schubert_via_divided_differences(w);
    throw std::invalid_argument("unknown method: " + method);
}

json weight_json(const Composition& wt) { return json(wt); }

json pipe_dream_json(const PipeDream& d) {
    json j = json::parse(d.to_json());
    j["weight"] = weight_json(d.weight());
    return j;
}

int cmd_schubert(const Permutation& w, const std::string& method, bool check_all,
                 const std::string& format, Output& out) {
    if (!check_all) {
        const SparsePolynomial p = schubert_by_method(w, method);
        if (format == "json") {
            json j;
            j["w"] = w.window();
            j["method"] = method;
            j["polynomial"] = json::parse(p.to_json());
            out.stream() << j.dump() << "\n";
        } else {
            out.stream() << p.to_string() << "\n";
        }
        return kExitOk;
    }
    const std::vector<std::string> methods = {"pipedreams", "compatible", "rfc", "divdiff"};
    std::vector<SparsePolynomial> values;
    values.reserve(methods.size());
    for (const auto& m : methods) values.push_back(schubert_by_method(w, m));
    bool agree = true;
    for (const auto& v : values) agree = agree && v == values.front();
    if (format == "json") {
        json j;
        j["w"] = w.window();
        j["methods"] = methods;
        j["agree"] = agree;
        j["polynomial"] = json::parse(values.front().to_json());
        out.stream() << j.dump() << "\n";
    } else {
        out.stream() << values.front().to_string() << "\n";
        if (agree) out.stream() << "OK: 4 methods agree\n";
    }
    if (!agree) {
        std::cerr << "method disagreement for w = " << w.to_string() << "\n";
        for (size_t k = 0; k < methods.size(); ++k)
            std::cerr << "  " << methods[k] << ": " << values[k].to_string() << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_pipedreams(const Permutation& w, const std::string& format, Output& out) {
    const auto dreams = reduced_pipe_dreams(w);
    if (format == "json") {
        json j;
        j["w"] = w.window();
        j["count"] = dreams.size();
        auto arr = json::array();
        for (const auto& d : dreams) arr.push_back(pipe_dream_json(d));
        j["pipedreams"] = std::move(arr);
        out.stream() << j.dump() << "\n";
        return kExitOk;
    }
    out.stream() << "w: " << w.to_string() << "\n";
    out.stream() << "count: " << dreams.size() << "\n";
    for (const auto& d : dreams) {
        out.stream() << "\nD: " << d.id_string() << "\n";
        out.stream() << "wt: " << to_string(d.weight()) << "\n";
        out.stream() << d.to_ascii() << "\n";
    }
    return kExitOk;
}

int cmd_crystal(const Permutation& w, const std::string& format, Output& out) {
    const CrystalGraph g = crystal_graph(w);
    if (format == "json") out.stream() << g.to_json() << "\n";
    else out.stream() << g.to_dot();
    return kExitOk;
}

int cmd_decompose(const Permutation& w, const std::string& format, Output& out) {
    std::vector<CrystalComponent> comps;
    try {
        comps = key_decomposition(w);
    } catch (const DecompositionError& e) {
        std::cerr << "FAIL: key polynomials do not reproduce the Schubert polynomial\n"
                  << e.what() << "\n";
        return kExitVerification;
    }
    if (format == "json") {
        json j;
        j["w"] = w.window();
        auto arr = json::array();
        for (const auto& c : comps) arr.push_back(json::parse(c.to_json()));
        j["components"] = std::move(arr);
        j["schubert"] = json::parse(schubert_via_pipe_dreams(w).to_json());
        j["verified"] = true;
        out.stream() << j.dump() << "\n";
        return kExitOk;
    }
    out.stream() << "w: " << w.to_string() << "\n";
    out.stream() << "components: " << comps.size() << "\n";
    size_t idx = 0;
    for (const auto& c : comps) {
        out.stream() << "\ncomponent " << ++idx << ":\n";
        out.stream() << "  highest: " << c.highest.id_string() << "\n";
        out.stream() << "  lambda: " << to_string(c.lambda) << "\n";
        out.stream() << "  pi: " << c.pi.to_string()
                     << "  word: " << word_to_string(reduced_word(c.pi)) << "\n";
        out.stream() << "  a: " << to_string(c.a) << "\n";
        out.stream() << "  size: " << c.members.size() << "\n";
        out.stream() << "  key polynomial: " << c.character.to_string() << "\n";
    }
    out.stream() << "\nOK: key polynomials sum to the Schubert polynomial\n";
    return kExitOk;
}

int cmd_rfc(const Permutation& w, const std::string& format, Output& out) {
    const auto all = enumerate_rfc(w);
    if (format == "json") {
        json j;
        j["w"] = w.window();
        j["count"] = all.size();
        auto arr = json::array();
        for (const auto& r : all) {
            json e = json::parse(r.to_json());
            e["weight"] = weight_json(r.weight());
            arr.push_back(std::move(e));
        }
        j["factorizations"] = std::move(arr);
        out.stream() << j.dump() << "\n";
        return kExitOk;
    }
    out.stream() << "w: " << w.to_string() << "\n";
    out.stream() << "count: " << all.size() << "\n";
    for (const auto& r : all)
        out.stream() << r.to_text() << "  wt=" << to_string(r.weight()) << "\n";
    return kExitOk;
}

int cmd_phi(const std::string& pd_text, const std::string& rfc_text,
            const std::string& format, Output& out) {
    if (pd_text.empty() == rfc_text.empty())
        throw std::invalid_argument("phi expects exactly one of --pipedream or --rfc");
    std::optional<PipeDream> d;
    std::optional<RFC> r;
    if (!pd_text.empty()) {
        d = PipeDream::from_json(pd_text);
        if (!is_reduced(*d)) throw std::invalid_argument("pipe dream is not reduced");
        r = rfc_from_pipe_dream(*d);
    } else {
        r = RFC::from_json(rfc_text);
        r->target();   // validates that the reading word is reduced
        d = pipe_dream_from_rfc(*r);
    }
    if (format == "json") {
        json j;
        j["pipedream"] = pipe_dream_json(*d);
        j["rfc"] = json::parse(r->to_json());
        j["weight"] = weight_json(d->weight());
        out.stream() << j.dump() << "\n";
        return kExitOk;
    }
    out.stream() << "D: " << d->id_string() << "\n";
    out.stream() << "wt: " << to_string(d->weight()) << "\n";
    out.stream() << d->to_ascii() << "\n";
    out.stream() << "r: " << r->to_text() << "\n";
    return kExitOk;
}

// One permutation's worth of verification. Property order is fixed; failures
// carry a short artifact describing the first offending object.
struct PropertyNames {
    static const std::vector<std::string>& all() {
        static const std::vector<std::string> names = {
            "schubert methods agree",
            "pipe dream enumeration integrity",
            "crystal operator axioms",
            "chute moves cover crystal edges and connect RP(w)",
            "factorization bijection and equivariance",
            "highest weight structure",
            "key decomposition identity",
            "demazure component oracle",
        };
        return names;
    }
};

struct PermResult {
    std::vector<bool> ok;
    std::vector<json> artifacts;

    void fail(size_t property, const Permutation& w, const std::string& detail) {
        ok[property] = false;
        json a;
        a["w"] = w.window();
        a["property"] = PropertyNames::all()[property];
        a["detail"] = detail;
        artifacts.push_back(std::move(a));
    }
};

PermResult verify_permutation(const Permutation& w) {
    const int n = w.size();
    PermResult res;
    res.ok.assign(PropertyNames::all().size(), true);

    const auto dreams = reduced_pipe_dreams(w);
    const SparsePolynomial via_pd = schubert_via_pipe_dreams(w);

    // 0: the four constructions of the Schubert polynomial coincide.
    if (schubert_via_divided_differences(w) != via_pd)
        res.fail(0, w, "divided differences disagree with pipe dreams");
    if (schubert_via_compatible_sequences(w) != via_pd)
        res.fail(0, w, "compatible sequences disagree with pipe dreams");
    if (schubert_via_rfc(w) != via_pd)
        res.fail(0, w, "factorizations disagree with pipe dreams");

    // 1: enumeration integrity.
    for (const auto& d : dreams) {
        if (d.trace_pipes() != w) { res.fail(1, w, "stray diagram " + d.id_string()); break; }
        if (!is_reduced(d)) { res.fail(1, w, "non-reduced diagram " + d.id_string()); break; }
        if (d.cross_count() != static_cast<size_t>(w.length())) {
            res.fail(1, w, "wrong cross count in " + d.id_string());
            break;
        }
    }

    // 2: lower/raise are mutually inverse and shift the weight by alpha_i.
    for (const auto& d : dreams) {
        for (int i = 1; i < n && res.ok[2]; ++i) {
            if (auto down = lower(d, i)) {
                Composition wt = d.weight();
                --wt[i - 1];
                ++wt[i];
                if (down->weight() != wt)
                    res.fail(2, w, "weight not shifted by alpha_" + std::to_string(i) +
                                       " at " + d.id_string());
                else if (raise(*down, i) != d)
                    res.fail(2, w, "raise does not invert lower at " + d.id_string());
            }
            if (auto up = raise(d, i)) {
                if (lower(*up, i) != d)
                    res.fail(2, w, "lower does not invert raise at " + d.id_string());
            }
        }
        if (!res.ok[2]) break;
    }

    // 3: crystal edges are chute moves and chute moves connect RP(w).
    const CrystalGraph graph = crystal_graph(w);
    {
        std::vector<std::vector<size_t>> adj(dreams.size());
        std::map<PipeDream, size_t> index;
        for (size_t k = 0; k < dreams.size(); ++k) index.emplace(dreams[k], k);
        for (size_t k = 0; k < dreams.size(); ++k) {
            for (const auto& m : chute_moves(dreams[k])) {
                const auto it = index.find(m);
                if (it == index.end()) {
                    res.fail(3, w, "chute move leaves RP(w) from " + dreams[k].id_string());
                    break;
                }
                adj[k].push_back(it->second);
                adj[it->second].push_back(k);
            }
            if (!res.ok[3]) break;
        }
        if (res.ok[3]) {
            for (const auto& e : graph.edges) {
                const auto& moves = adj[e.source];
                if (std::find(moves.begin(), moves.end(), static_cast<size_t>(e.target)) ==
                    moves.end()) {
                    res.fail(3, w, "crystal edge is not a chute move at " +
                                       graph.vertices[e.source].id_string());
                    break;
                }
            }
        }
        if (res.ok[3] && !dreams.empty()) {
            std::vector<char> seen(dreams.size(), 0);
            std::vector<size_t> stack{0};
            seen[0] = 1;
            size_t reached = 1;
            while (!stack.empty()) {
                const size_t cur = stack.back();
                stack.pop_back();
                for (size_t nb : adj[cur])
                    if (!seen[nb]) { seen[nb] = 1; ++reached; stack.push_back(nb); }
            }
            if (reached != dreams.size())
                res.fail(3, w, "chute moves do not connect RP(w)");
        }
    }

    // 4: the factorization bijection preserves weight and intertwines operators.
    {
        std::set<RFC> image;
        for (const auto& d : dreams) {
            const RFC r = rfc_from_pipe_dream(d);
            image.insert(r);
            if (r.weight() != d.weight()) {
                res.fail(4, w, "weight changed across the bijection at " + d.id_string());
                break;
            }
            if (pipe_dream_from_rfc(r) != d) {
                res.fail(4, w, "bijection fails to invert at " + d.id_string());
                break;
            }
            for (int i = 1; i < n; ++i) {
                const auto fd = lower(d, i);
                const auto fr = lower(r, i);
                if (fd.has_value() != fr.has_value() ||
                    (fd && rfc_from_pipe_dream(*fd) != *fr)) {
                    res.fail(4, w, "lowering does not commute at " + d.id_string());
                    break;
                }
                const auto ed = raise(d, i);
                const auto er = raise(r, i);
                if (ed.has_value() != er.has_value() ||
                    (ed && rfc_from_pipe_dream(*ed) != *er)) {
                    res.fail(4, w, "raising does not commute at " + d.id_string());
                    break;
                }
            }
            if (!res.ok[4]) break;
        }
        if (res.ok[4]) {
            const auto rfcs = enumerate_rfc(w.inverse());
            if (image != std::set<RFC>(rfcs.begin(), rfcs.end()))
                res.fail(4, w, "image of RP(w) is not RFC(w^-1)");
        }
    }

    // 5: highest weight structure inside each component.
    std::vector<Component> comps;
    try {
        comps = crystal_components(graph);
    } catch (const std::exception& e) {
        res.fail(5, w, std::string("component extraction failed: ") + e.what());
    }
    for (const auto& comp : comps) {
        if (!res.ok[5]) break;
        size_t hw = 0;
        for (const auto& d : comp.members)
            if (is_highest_weight(d)) ++hw;
        if (hw != 1) { res.fail(5, w, "component without unique highest vertex"); break; }
        if (!is_partition(comp.lambda)) {
            res.fail(5, w, "highest weight is not a partition at " + comp.highest.id_string());
            break;
        }
        std::set<PipeDream> seen{comp.highest};
        std::vector<PipeDream> frontier{comp.highest};
        while (!frontier.empty()) {
            PipeDream cur = frontier.back();
            frontier.pop_back();
            for (int i = 1; i < n; ++i)
                if (auto down = lower(cur, i); down && seen.insert(*down).second)
                    frontier.push_back(*down);
        }
        if (seen != std::set<PipeDream>(comp.members.begin(), comp.members.end())) {
            res.fail(5, w, "lowering closure misses part of the component of " +
                               comp.highest.id_string());
            break;
        }
        // Column positions of the l-th cross weakly increase down the rows.
        std::vector<std::vector<int>> cols(n + 1);
        for (const auto& c : comp.highest.crosses()) cols[c.row].push_back(c.col);
        for (auto& v : cols) std::sort(v.begin(), v.end());
        for (int i = 1; i + 1 <= n && res.ok[5]; ++i)
            for (size_t l = 0; l < cols[i].size() && l < cols[i + 1].size(); ++l) {
                if (cols[i][l] > cols[i + 1][l]) {
                    res.fail(5, w, "column order violated at " + comp.highest.id_string());
                    break;
                }
            }
    }

    // 6 and 7: the decomposition identity and its tableau-crystal oracle.
    try {
        const auto decomposition = key_decomposition(w);
        SparsePolynomial total(n);
        for (const auto& c : decomposition) total += c.character;
        if (total != via_pd) res.fail(6, w, "key polynomial sum mismatch");
        for (const auto& c : decomposition) {
            std::vector<Composition> weights;
            for (const auto& d : c.members) weights.push_back(d.weight());
            std::sort(weights.begin(), weights.end());
            if (weights != demazure_crystal_weights(c.lambda, c.pi, n)) {
                res.fail(7, w, "component weights differ from the tableau crystal of " +
                                   c.highest.id_string());
                break;
            }
        }
    } catch (const DecompositionError&) {
        res.fail(6, w, "decomposition identity failed");
    }

    return res;
}

int cmd_verify(int n, int jobs, const std::string& format, Output& out) {
    if (n < 2 || n > 7) throw std::invalid_argument("verify supports 2 <= n <= 7");
    std::vector<Permutation> perms;
    {
        std::vector<int> win(n);
        for (int i = 0; i < n; ++i) win[i] = i + 1;
        do {
            perms.emplace_back(win);
        } while (std::next_permutation(win.begin(), win.end()));
    }
    std::vector<PermResult> results(perms.size());
    if (jobs < 1) jobs = 1;
    {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const size_t k = next.fetch_add(1);
                if (k >= perms.size()) return;
                results[k] = verify_permutation(perms[k]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
    }

    const auto& names = PropertyNames::all();
    std::vector<size_t> passed(names.size(), 0);
    std::vector<json> artifacts;
    for (const auto& r : results) {
        for (size_t p = 0; p < names.size(); ++p)
            if (r.ok[p]) ++passed[p];
        for (const auto& a : r.artifacts) artifacts.push_back(a);
    }
    const bool all_ok = artifacts.empty();

    if (format == "json") {
        json j;
        j["n"] = n;
        j["permutations"] = perms.size();
        auto props = json::array();
        for (size_t p = 0; p < names.size(); ++p)
            props.push_back({{"name", names[p]},
                             {"passed", passed[p]},
                             {"failed", perms.size() - passed[p]}});
        j["properties"] = std::move(props);
        j["failures"] = artifacts;
        j["ok"] = all_ok;
        out.stream() << j.dump() << "\n";
    } else {
        out.stream() << "verify n=" << n << " over " << perms.size() << " permutations\n";
        for (size_t p = 0; p < names.size(); ++p)
            out.stream() << (passed[p] == perms.size() ? "PASS " : "FAIL ") << names[p]
                         << " (" << passed[p] << "/" << perms.size() << ")\n";
        out.stream() << "RESULT " << (all_ok ? "PASS" : "FAIL") << " (" << names.size()
                     << " properties, " << perms.size() << " permutations)\n";
        for (const auto& a : artifacts) std::cerr << a.dump() << "\n";
    }
    return all_ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pipe dream crystals and key polynomial decompositions"};
    app.require_subcommand(1);

    std::string w_text, format, out_path, method = "pipedreams";
    std::string pd_text, rfc_text;
    bool check_all = false;
    int sweep_n = 0, jobs = 1;

    auto add_common = [&](CLI::App* sub, const std::string& default_format,
                          const std::set<std::string>& formats) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats))
            ->default_str(default_format);
        sub->add_option("--out", out_path, "write output to a file");
        sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    CLI::App* schubert = app.add_subcommand("schubert", "Schubert polynomial of w");
    schubert->add_option("w", w_text, "one-line window, e.g. 2,1,5,4,3")->required();
    schubert->add_option("--method", method, "construction to use")
        ->check(CLI::IsMember({"pipedreams", "compatible", "rfc", "divdiff"}))
        ->capture_default_str();
    schubert->add_flag("--check-all", check_all, "compare all four constructions");
    add_common(schubert, "text", {"text", "json"});

    CLI::App* pipedreams = app.add_subcommand("pipedreams", "enumerate RP(w)");
    pipedreams->add_option("w", w_text)->required();
    add_common(pipedreams, "text", {"text", "json"});

    CLI::App* crystal = app.add_subcommand("crystal", "crystal graph on RP(w)");
    crystal->add_option("w", w_text)->required();
    add_common(crystal, "dot", {"dot", "json"});

    CLI::App* decompose =
        app.add_subcommand("decompose", "key polynomial decomposition of the Schubert polynomial");
    decompose->add_option("w", w_text)->required();
    add_common(decompose, "text", {"text", "json"});

    CLI::App* rfc = app.add_subcommand("rfc", "enumerate reduced factorizations with cutoff");
    rfc->add_option("w", w_text)->required();
    add_common(rfc, "text", {"text", "json"});

    CLI::App* phi = app.add_subcommand("phi", "map between pipe dreams and factorizations");
    phi->add_option("--pipedream", pd_text, "pipe dream JSON");
    phi->add_option("--rfc", rfc_text, "factorization JSON");
    add_common(phi, "text", {"text", "json"});

    CLI::App* verify = app.add_subcommand("verify", "run the property suite over S_n");
    verify->add_option("n", sweep_n, "sweep all permutations of S_n")->required();
    add_common(verify, "text", {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (format.empty()) format = crystal->parsed() ? "dot" : "text";

    try {
        Output out(out_path);
        if (schubert->parsed())
            return cmd_schubert(Permutation::parse(w_text), method, check_all, format, out);
        if (pipedreams->parsed())
            return cmd_pipedreams(Permutation::parse(w_text), format, out);
        if (crystal->parsed())
            return cmd_crystal(Permutation::parse(w_text), format, out);
        if (decompose->parsed())
            return cmd_decompose(Permutation::parse(w_text), format, out);
        if (rfc->parsed())
            return cmd_rfc(Permutation::parse(w_text), format, out);
        if (phi->parsed())
            return cmd_phi(pd_text, rfc_text, format, out);
        if (verify->parsed())
            return cmd_verify(sweep_n, jobs, format, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
