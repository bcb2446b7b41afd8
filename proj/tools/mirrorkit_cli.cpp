// mirrorkit: command-line front end.
//
// Exit status: 0 success, 1 usage or input error, 2 inconclusive within bounds.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mirrorkit.hpp"

namespace mk = mirrorkit;
using mk::Json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInconclusive = 2;

struct Options {
    bool json = false;
    std::optional<std::size_t> terms;
    mk::Int w_max = 12;
    mk::Int deg_max = 6;
    std::size_t depth = 1;
    std::string cache;
    unsigned threads = 1;
    std::optional<std::size_t> rank;

    std::string input;
    std::string file;
};

/// Period sequences stored on disk between runs. Anything unreadable is
/// treated as absent; the file is rewritten whole.
class PeriodCache {
public:
    explicit PeriodCache(std::string path) : path_(std::move(path)) {
        if (path_.empty()) return;
        std::ifstream in(path_);
        if (!in) return;
        try {
            Json doc = Json::parse(in);
            if (doc.value("format_version", 0) != mk::kFormatVersion) return;
            for (const auto& [key, seq] : doc.at("periods").items()) entries_[key] = mk::sequence_from_json(seq);
        } catch (const std::exception&) {
            entries_.clear();
        }
    }

    std::optional<mk::PeriodSequence> lookup(const std::string& key, std::size_t n) const {
        auto it = entries_.find(key);
        if (it == entries_.end() || it->second.size() < n + 1) return std::nullopt;
        return mk::PeriodSequence(it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(n + 1));
    }

    void store(const std::string& key, const mk::PeriodSequence& seq) {
        if (path_.empty()) return;
        auto& slot = entries_[key];
        if (slot.size() >= seq.size()) return;
        slot = seq;
        Json doc{{"format_version", mk::kFormatVersion}, {"periods", Json::object()}};
        for (const auto& [k, s] : entries_) doc["periods"][k] = mk::to_json(s);
        std::string tmp = path_ + ".tmp";
        {
            std::ofstream out(tmp);
            out << doc.dump() << "\n";
            if (!out) return;
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path_, ec);
    }

private:
    std::string path_;
    std::map<std::string, mk::PeriodSequence> entries_;
};

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string input_text(const Options& o) {
    bool inline_given = !o.input.empty();
    bool file_given = !o.file.empty();
    if (inline_given == file_given) throw UsageError("give exactly one input: an expression, '-' or --file PATH");
    if (file_given) {
        std::ifstream in(o.file);
        if (!in) throw UsageError("cannot read " + o.file);
        return trim(read_all(in));
    }
    if (o.input == "-") return trim(read_all(std::cin));
    return trim(o.input);
}

mk::LaurentPolynomial read_polynomial(const std::string& text, std::optional<std::size_t> rank) {
    if (!text.empty() && text.front() == '{') {
        auto f = mk::polynomial_from_json(Json::parse(text));
        if (rank && *rank != f.rank()) throw mk::Error(mk::ErrorKind::rank_mismatch, "--rank disagrees with JSON 'n'");
        return f;
    }
    return mk::parse(text, rank);
}

/// Polytope input: polytope JSON, or a polynomial whose Newton polytope is used.
mk::LatticePolytope read_polytope(const std::string& text, std::optional<std::size_t> rank) {
    if (!text.empty() && text.front() == '{') {
        Json j = Json::parse(text);
        if (j.contains("vertices")) return mk::polytope_from_json(j);
    }
    return mk::newton_polytope(read_polynomial(text, rank));
}

Json bounds_json(const Options& o, std::size_t terms) {
    return {{"terms", terms}, {"wmax", o.w_max}, {"degmax", o.deg_max}, {"depth", o.depth}};
}

Json envelope(const std::string& command, const Options& o, std::size_t terms) {
    return {{"format_version", mk::kFormatVersion}, {"command", command}, {"bounds", bounds_json(o, terms)}};
}

mk::PeriodSequence period_of(const mk::LaurentPolynomial& f, std::size_t n, PeriodCache& cache) {
    std::string key = mk::format(f);
    if (auto hit = cache.lookup(key, n)) return *hit;
    auto seq = mk::classical_period(f, n);
    cache.store(key, seq);
    return seq;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string vector_text(const mk::IntVector& v) {
    std::vector<std::string> p;
    for (auto x : v) p.push_back(std::to_string(x));
    return "(" + join(p, ",") + ")";
}

template <class T>
std::string mpz_list(const std::vector<T>& v) {
    std::vector<std::string> p;
    for (const auto& x : v) p.push_back(x.get_str());
    return "(" + join(p, ",") + ")";
}

Json weights_json(const std::vector<mpz_class>& w) {
    Json a = Json::array();
    for (const auto& x : w) a.push_back(x.get_str());
    return a;
}

void emit(const Options& o, const Json& doc, const std::string& text) {
    if (o.json) std::cout << doc.dump(2) << "\n";
    else std::cout << text;
}

mk::MutationBounds mutation_bounds(const Options& o) {
    if (o.w_max <= 0 || o.deg_max <= 0) throw UsageError("--wmax and --degmax must be positive");
    return {o.w_max, o.deg_max};
}

// ---- subcommands ----------------------------------------------------------

int cmd_period(const Options& o, PeriodCache& cache) {
    std::size_t n = o.terms.value_or(12);
    auto f = read_polynomial(input_text(o), o.rank);
    auto seq = period_of(f, n, cache);
    Json doc = envelope("period", o, n);
    doc["polynomial"] = mk::format(f);
    doc["period"] = mk::to_json(seq);
    std::size_t width = std::to_string(n).size();
    std::ostringstream text;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        std::string idx = std::to_string(k);
        text << std::string(width - idx.size(), ' ') << idx << "  " << seq[k].get_str() << "\n";
    }
    emit(o, doc, text.str());
    return kOk;
}

int cmd_compare(const Options& o, const std::string& other, const std::string& series, PeriodCache& cache) {
    std::size_t n = o.terms.value_or(12);
    auto f = read_polynomial(input_text(o), o.rank);
    if (other.empty() == series.empty()) throw UsageError("compare needs exactly one of --with or --series");
    mk::PeriodSequence reference;
    std::string against;
    if (!series.empty()) {
        reference = mk::known_series(series, n);
        against = series;
    } else {
        auto g = read_polynomial(other, o.rank ? o.rank : std::optional<std::size_t>(f.rank()));
        reference = period_of(g, n, cache);
        against = mk::format(g);
    }
    auto mine = period_of(f, n, cache);
    auto cmp = mk::compare_sequences(mine, reference, n);
    Json doc = envelope("compare", o, n);
    doc["polynomial"] = mk::format(f);
    doc["against"] = against;
    doc["agree"] = cmp.agree;
    doc["first_mismatch"] = cmp.first_mismatch ? Json(*cmp.first_mismatch) : Json(nullptr);
    doc["period"] = mk::to_json(mine);
    doc["reference"] = mk::to_json(reference);
    std::string text = cmp.agree ? "agree through t^" + std::to_string(n) + "\n"
                                 : "differ at t^" + std::to_string(*cmp.first_mismatch) + ": " +
                                       mine[*cmp.first_mismatch].get_str() + " vs " +
                                       reference[*cmp.first_mismatch].get_str() + "\n";
    emit(o, doc, text);
    return kOk;
}

std::string polytope_text(const mk::LatticePolytope& P) {
    std::vector<std::string> vs;
    for (const auto& v : P.vertices()) vs.push_back(vector_text(v));
    return "rank " + std::to_string(P.rank()) + ", dimension " + std::to_string(P.dimension()) + "\nvertices " +
           join(vs, " ") + "\n";
}

int cmd_newton(const Options& o) {
    auto f = read_polynomial(input_text(o), o.rank);
    auto P = mk::newton_polytope(f);
    Json doc = envelope("newton", o, o.terms.value_or(0));
    doc["polytope"] = mk::to_json(P);
    doc["dimension"] = P.dimension();
    std::string text = polytope_text(P);
    if (P.is_full_dimensional()) {
        auto fano = mk::is_fano(P);
        doc["fano"] = fano.is_fano();
        doc["origin_interior"] = fano.origin_interior;
        doc["vertices_primitive"] = fano.vertices_primitive;
        auto idx = mk::exponent_lattice_index(f);
        doc["lattice_index"] = idx.index ? Json(idx.index->get_str()) : Json(nullptr);
        text += std::string("fano ") + (fano.is_fano() ? "yes" : "no") + ", lattice index " +
                (idx.index ? idx.index->get_str() : "infinite") + "\n";
    }
    emit(o, doc, text);
    return kOk;
}

int cmd_dual(const Options& o) {
    auto P = read_polytope(input_text(o), o.rank);
    auto D = mk::dual_polytope(P);
    Json doc = envelope("dual", o, o.terms.value_or(0));
    doc["dual"] = mk::to_json(D);
    std::vector<std::string> vs;
    for (const auto& v : D.vertices) vs.push_back(mpz_list(v));
    emit(o, doc, "dual vertices " + join(vs, " ") + "\nintegral " + (D.integral ? "yes" : "no") + "\n");
    return kOk;
}

int cmd_reflexive(const Options& o) {
    auto P = read_polytope(input_text(o), o.rank);
    bool r = mk::is_reflexive(P);
    Json doc = envelope("reflexive", o, o.terms.value_or(0));
    doc["reflexive"] = r;
    emit(o, doc, std::string(r ? "reflexive" : "not reflexive") + "\n");
    return kOk;
}

int cmd_points(const Options& o, bool of_dual) {
    auto P = read_polytope(input_text(o), o.rank);
    if (of_dual) {
        auto D = mk::dual_polytope(P);
        if (!D.integral) throw mk::Error(mk::ErrorKind::invalid_argument, "dual polytope is not integral");
        P = D.to_lattice();
    }
    auto pts = mk::lattice_points(P);
    Json doc = envelope("points", o, o.terms.value_or(0));
    doc["polytope"] = mk::to_json(P);
    doc["total"] = pts.all.size();
    doc["boundary"] = pts.boundary.size();
    doc["interior"] = pts.interior.size();
    doc["boundary_points"] = pts.boundary;
    doc["interior_points"] = pts.interior;
    emit(o, doc,
         "total " + std::to_string(pts.all.size()) + "\nboundary " + std::to_string(pts.boundary.size()) +
             "\ninterior " + std::to_string(pts.interior.size()) + "\n");
    return kOk;
}

int cmd_weights(const Options& o) {
    auto P = read_polytope(input_text(o), o.rank);
    auto w = mk::simplex_weights(P);
    Json doc = envelope("weights", o, o.terms.value_or(0));
    doc["weights"] = weights_json(w);
    emit(o, doc, mpz_list(w) + "\n");
    return kOk;
}

int cmd_nf(const Options& o) {
    auto P = read_polytope(input_text(o), o.rank);
    auto nf = mk::normal_form(P);
    if (!nf.certified) std::cerr << "warning: normal form search exceeded its budget; fingerprint is not certified\n";
    Json doc = envelope("nf", o, o.terms.value_or(0));
    doc["columns"] = nf.columns;
    doc["certified"] = nf.certified;
    std::ostringstream hash;
    hash << std::hex << nf.hash();
    doc["hash"] = hash.str();
    std::vector<std::string> cs;
    for (const auto& c : nf.columns) cs.push_back(vector_text(c));
    emit(o, doc, join(cs, " ") + "\nhash " + hash.str() + (nf.certified ? "" : " (not certified)") + "\n");
    return kOk;
}

int cmd_mutate(const Options& o, const std::vector<mk::Int>& w, const std::string& factor, bool raw) {
    auto f = read_polynomial(input_text(o), o.rank);
    if (w.size() != f.rank()) throw UsageError("--w must have " + std::to_string(f.rank()) + " entries");
    mk::MutationData m{w, mk::parse(factor, f.rank())};
    auto g = raw ? mk::mutate_raw(f, m) : mk::mutate(f, m);
    Json doc = envelope("mutate", o, o.terms.value_or(0));
    doc["polynomial"] = mk::format(f);
    doc["w"] = w;
    doc["factor"] = mk::format(m.factor);
    doc["result"] = mk::format(g);
    doc["result_json"] = mk::to_json(g);
    doc["shear_canonical"] = !raw;
    emit(o, doc, mk::format(g) + "\n");
    return kOk;
}

int cmd_mutations(const Options& o) {
    auto f = read_polynomial(input_text(o), o.rank);
    auto found = mk::enumerate_mutations(f, mutation_bounds(o), o.threads);
    Json doc = envelope("mutations", o, o.terms.value_or(0));
    doc["polynomial"] = mk::format(f);
    doc["partial"] = found.partial;
    doc["weights_examined"] = found.candidates_examined;
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& m : found.mutations) {
        auto g = mk::mutate(f, m.data);
        list.push_back({{"w", m.data.w}, {"factor", mk::format(m.data.factor)}, {"degree", m.degree},
                        {"result", mk::format(g)}});
        text << "w=" << vector_text(m.data.w) << "  F=" << mk::format(m.data.factor) << "  ->  " << mk::format(g)
             << "\n";
    }
    doc["mutations"] = list;
    if (found.partial) text << "(partial: restricted factor search in rank " << f.rank() << ")\n";
    if (found.mutations.empty()) text << "no mutations within bounds\n";
    emit(o, doc, text.str());
    return found.partial || found.mutations.empty() ? kInconclusive : kOk;
}

int cmd_graph(const Options& o, const std::string& dot_path) {
    auto f = read_polynomial(input_text(o), o.rank);
    auto g = mk::build_graph(f, o.depth, mutation_bounds(o), o.threads);
    std::string dot = mk::export_dot(g);
    if (!dot_path.empty()) {
        if (dot_path == "-") {
            std::cout << dot;
            return g.partial ? kInconclusive : kOk;
        }
        std::ofstream out(dot_path);
        if (!out) throw UsageError("cannot write " + dot_path);
        out << dot;
    }
    Json doc = envelope("graph", o, o.terms.value_or(0));
    doc["partial"] = g.partial;
    Json nodes = Json::array();
    std::ostringstream text;
    std::vector<std::size_t> per_depth(o.depth + 1, 0);
    for (const auto& n : g.nodes) {
        ++per_depth[n.depth];
        std::ostringstream h;
        h << std::hex << n.label.hash();
        Json node{{"id", n.id},
                  {"depth", n.depth},
                  {"parent", n.parent ? Json(*n.parent) : Json(nullptr)},
                  {"label", h.str()},
                  {"certified", n.label.certified},
                  {"polynomial", mk::format(n.polynomial)}};
        auto P = mk::newton_polytope(n.polynomial);
        if (P.vertices().size() == P.rank() + 1) node["weights"] = weights_json(mk::simplex_weights(P));
        nodes.push_back(node);
    }
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}});
    doc["nodes"] = nodes;
    doc["edges"] = edges;
    text << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
    for (std::size_t d = 0; d < per_depth.size(); ++d) text << "depth " << d << ": " << per_depth[d] << " nodes\n";
    if (g.partial) text << "(partial: restricted factor search)\n";
    emit(o, doc, text.str());
    return g.partial ? kInconclusive : kOk;
}

int cmd_markov(const Options& o, bool check) {
    Json doc = envelope("markov", o, o.terms.value_or(0));
    std::ostringstream text;
    if (!check) {
        auto tree = mk::markov_tree(o.depth);
        Json nodes = Json::array();
        for (std::size_t i = 0; i < tree.size(); ++i) {
            const auto& t = tree[i].triple;
            nodes.push_back({{"id", i},
                             {"depth", tree[i].depth},
                             {"parent", tree[i].parent ? Json(*tree[i].parent) : Json(nullptr)},
                             {"triple", {t[0].get_str(), t[1].get_str(), t[2].get_str()}}});
            text << std::string(2 * tree[i].depth, ' ') << "(" << t[0] << "," << t[1] << "," << t[2] << ")\n";
        }
        doc["tree"] = nodes;
        emit(o, doc, text.str());
        return kOk;
    }
    auto report = mk::p2_correspondence_check(o.depth, mutation_bounds(o), o.threads);
    Json levels = Json::array();
    for (const auto& l : report.levels) {
        Json gw = Json::array(), tw = Json::array();
        for (const auto& w : l.graph_weights) gw.push_back(weights_json(w));
        for (const auto& w : l.tree_weights) tw.push_back(weights_json(w));
        levels.push_back({{"depth", l.depth}, {"graph_nodes", l.graph_nodes}, {"match", l.matches()},
                          {"graph_weights", gw}, {"tree_weights", tw}});
        std::vector<std::string> ws;
        for (const auto& w : l.graph_weights) ws.push_back(mpz_list(w));
        text << "depth " << l.depth << ": " << (l.matches() ? "match" : "MISMATCH") << "  " << join(ws, " ") << "\n";
    }
    doc["levels"] = levels;
    doc["ok"] = report.ok();
    emit(o, doc, text.str());
    return report.ok() ? kOk : kInconclusive;
}

int cmd_rigid(const Options& o) {
    auto f = read_polynomial(input_text(o), o.rank);
    auto v = mk::is_rigid(f, mutation_bounds(o), o.threads);
    Json doc = envelope("rigid", o, o.terms.value_or(0));
    doc["status"] = mk::to_string(v.status);
    doc["dimension"] = v.dimension;
    doc["seeds"] = v.seeds.seeds.size();
    doc["partial"] = v.seeds.partial;
    if (v.witness) {
        doc["witness_point"] = mk::format(*v.witness);
        doc["nonnegative_integral"] = v.nonnegative_integral;
    }
    std::string text = mk::to_string(v.status) + " (dimension " + std::to_string(v.dimension) + ", " +
                       std::to_string(v.seeds.seeds.size()) + " seeds, wmax " + std::to_string(o.w_max) +
                       ", degmax " + std::to_string(o.deg_max) + ")\n";
    emit(o, doc, text);
    return v.status == mk::RigidityStatus::inconclusive ? kInconclusive : kOk;
}

int cmd_pf(const Options& o, std::size_t r_max, std::size_t d_max, PeriodCache& cache) {
    std::string text_in = input_text(o);
    std::size_t need = mk::required_terms(r_max, d_max);
    mk::PeriodSequence seq;
    if (!text_in.empty() && text_in.front() == '[') {
        seq = mk::sequence_from_json(Json::parse(text_in));
        if (o.terms && *o.terms + 1 < seq.size()) seq.resize(*o.terms + 1);
    } else {
        auto f = read_polynomial(text_in, o.rank);
        std::size_t n = std::max(o.terms.value_or(0) + 1, need);
        seq = period_of(f, n - 1, cache);
    }
    auto rec = mk::fit_recurrence(seq, r_max, d_max);
    Json doc = envelope("pf", o, seq.size());
    doc["rmax"] = r_max;
    doc["dmax"] = d_max;
    doc["terms_used"] = seq.size();
    if (!rec) {
        doc["found"] = false;
        emit(o, doc, "no recurrence with order <= " + std::to_string(r_max) + " and degree <= " +
                         std::to_string(d_max) + " fits " + std::to_string(seq.size()) + " terms\n");
        return kInconclusive;
    }
    auto L = mk::to_differential_operator(*rec);
    doc["found"] = true;
    doc["r"] = rec->order;
    doc["d"] = rec->degree;
    Json q = Json::array();
    for (const auto& p : rec->q) {
        Json row = Json::array();
        for (const auto& c : p) row.push_back(c.get_str());
        q.push_back(row);
    }
    doc["q"] = q;
    doc["operator"] = mk::to_string(L);
    emit(o, doc,
         "order " + std::to_string(rec->order) + ", degree " + std::to_string(rec->degree) + "\n" + mk::to_string(L) +
             "\n");
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mirrorkit: Laurent polynomials, periods, polytopes and mutations"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Write JSON instead of text");
    app.add_option("--terms", o.terms, "Number of period terms")->check(CLI::NonNegativeNumber);
    app.add_option("--wmax", o.w_max, "Deepest slice a mutation weight may reach")->capture_default_str();
    app.add_option("--degmax", o.deg_max, "Largest factor degree")->capture_default_str();
    app.add_option("--depth", o.depth, "Graph or tree depth")->capture_default_str();
    app.add_option("--cache", o.cache, "Period cache file");
    app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--rank", o.rank, "Number of variables")->check(CLI::PositiveNumber);

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "Expression, JSON, or '-' for standard input");
        sub->add_option("--file", o.file, "Read the input from a file");
        sub->fallthrough();
        return sub;
    };

    std::string other, series, factor, dot_path;
    std::vector<mk::Int> w;
    bool raw = false, check = false, of_dual = false;
    std::size_t r_max = 4, d_max = 4;

    auto* period = with_input(app.add_subcommand("period", "Classical period sequence"));
    auto* compare = with_input(app.add_subcommand("compare", "Compare periods with a polynomial or known series"));
    compare->add_option("--with", other, "Second polynomial");
    compare->add_option("--series", series,
                        "projective-plane | quadric-surface-product | del-pezzo-4 | cubic-threefold");
    auto* newton = with_input(app.add_subcommand("newton", "Newton polytope"));
    auto* dual = with_input(app.add_subcommand("dual", "Dual polytope"));
    auto* reflexive = with_input(app.add_subcommand("reflexive", "Reflexivity test"));
    auto* points = with_input(app.add_subcommand("points", "Lattice point counts"));
    points->add_flag("--of-dual", of_dual, "Count points of the dual polytope");
    auto* weights = with_input(app.add_subcommand("weights", "Weights of a simplex"));
    auto* nf = with_input(app.add_subcommand("nf", "Normal form"));
    auto* mutate = with_input(app.add_subcommand("mutate", "Apply one mutation"));
    mutate->add_option("--w", w, "Primitive weight, comma separated")->delimiter(',')->required();
    mutate->add_option("--factor", factor, "Factor on w-perp")->required();
    mutate->add_flag("--raw", raw, "Skip shear canonicalization");
    auto* mutations = with_input(app.add_subcommand("mutations", "Enumerate mutations within bounds"));
    auto* graph = with_input(app.add_subcommand("graph", "Mutation graph to --depth"));
    graph->add_option("--dot", dot_path, "Write DOT to a file ('-' for standard output)");
    auto* markov = app.add_subcommand("markov", "Markov triple tree to --depth");
    markov->add_flag("--check", check, "Compare with the mutation graph of x+y+1/xy");
    markov->fallthrough();
    auto* rigid = with_input(app.add_subcommand("rigid", "Rigid MMLP test within bounds"));
    auto* pf = with_input(app.add_subcommand("pf", "Fit a recurrence and differential operator"));
    pf->add_option("--rmax", r_max, "Largest order")->capture_default_str();
    pf->add_option("--dmax", d_max, "Largest coefficient degree")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    PeriodCache cache(o.cache);
    try {
        if (*period) return cmd_period(o, cache);
        if (*compare) return cmd_compare(o, other, series, cache);
        if (*newton) return cmd_newton(o);
        if (*dual) return cmd_dual(o);
        if (*reflexive) return cmd_reflexive(o);
        if (*points) return cmd_points(o, of_dual);
        if (*weights) return cmd_weights(o);
        if (*nf) return cmd_nf(o);
        if (*mutate) return cmd_mutate(o, w, factor, raw);
        if (*mutations) return cmd_mutations(o);
        if (*graph) return cmd_graph(o, dot_path);
        if (*markov) return cmd_markov(o, check);
        if (*rigid) return cmd_rigid(o);
        if (*pf) return cmd_pf(o, r_max, d_max, cache);
    } catch (const mk::ParseError& e) {
        std::cerr << "error [parse]: " << e.what() << "\n";
        return kUsage;
    } catch (const mk::Error& e) {
        std::cerr << "error [" << mk::to_string(e.kind()) << "]: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
