#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphca/graphca.hpp"

namespace graphca::cli {

namespace {

using json = nlohmann::json;

constexpr std::size_t max_product_factors = 6;

// Thrown when an emitted or supplied array fails verification.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t chi = default_chromatic_limit;
  std::size_t omega = default_clique_limit;
};

// GRAPHCA_LIMITS="chi=20,omega=30" raises the exact-search vertex limits.
Limits read_limits() {
  Limits limits;
  const char* env = std::getenv("GRAPHCA_LIMITS");
  if (!env) return limits;
  std::istringstream in(env);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "GRAPHCA_LIMITS: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    std::size_t n = 0;
    try {
      n = std::stoul(value);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "GRAPHCA_LIMITS: bad number '" + value + "'");
    }
    if (key == "chi") limits.chi = n;
    else if (key == "omega") limits.omega = n;
    else fail(ErrorCode::ParseError, "GRAPHCA_LIMITS: unknown key '" + key + "'");
  }
  return limits;
}

std::string fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
  std::uint64_t h = 14695981039346656037ull;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
    h ^= static_cast<unsigned char>(*it);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Collects the input/output file lists of one command.
class Session {
 public:
  void input(const std::string& path) { inputs_.push_back({{"path", path}, {"fnv1a", fnv1a_file(path)}}); }
  void output(const std::string& path) { outputs_.push_back(path); }

  Graph read_graph(const std::string& path) {
    input(path);
    return read_col_file(path);
  }

  json inputs() const { return inputs_; }
  json outputs() const { return outputs_; }

 private:
  json inputs_ = json::array();
  json outputs_ = json::array();
};

json failing_edges_json(const VerifyReport& report, const Graph& g) {
  json out = json::array();
  for (const auto& f : report.failing_edges)
    out.push_back({{"u", g.label(f.edge.u)}, {"v", g.label(f.edge.v)}, {"missing", {f.missing_first, f.missing_second}}});
  return out;
}

// Writes the array, reads it back, rebinds it by label and re-verifies.
void emit_ca(Session& s, const std::string& path, const CoveringArray& ca, const Graph& g) {
  write_ca_file(path, ca);
  s.output(path);
  CoveringArray back = read_ca_file(path);
  bind_by_labels(back, g);
  if (back.matrix != ca.matrix) throw VerificationFailure(path + ": re-read array differs from the one written");
  const auto report = verify_ca(back, g);
  if (!report.ok)
    throw VerificationFailure(path + ": re-read array fails on " + std::to_string(report.failing_edges.size()) +
                              " edge(s)");
}

void emit_graph(Session& s, const std::string& path, const Graph& g) {
  write_col_file(path, g);
  s.output(path);
  if (!(read_col_file(path) == g)) throw VerificationFailure(path + ": re-read graph differs from the one written");
}

void emit_coords(Session& s, const std::string& path, const std::vector<Tuple>& coords) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, path + ": cannot open file for writing");
  write_coords(out, coords);
  s.output(path);
}

json construction_json(const ConstructionResult& r) {
  return {{"strategy", r.report.strategy},       {"input_sizes", r.report.input_sizes},
          {"output_size", r.report.output_size}, {"lower_bound", r.report.lower_bound},
          {"notes", r.report.notes},             {"vertices", r.graph.vertex_count()},
          {"edges", r.graph.edge_count()},       {"symbols", r.ca.symbols}};
}

// ---- make ---------------------------------------------------------------

struct MakeOptions {
  std::string family;
  std::size_t n = 0;
  std::vector<std::size_t> set;
  std::string out;
};

json cmd_make(Session& s, const MakeOptions& o) {
  GraphFamily f;
  f.n = o.n;
  f.connection_set = o.set;
  if (o.family == "path") f.kind = GraphFamily::Kind::Path;
  else if (o.family == "cycle") f.kind = GraphFamily::Kind::Cycle;
  else if (o.family == "complete") f.kind = GraphFamily::Kind::Complete;
  else if (o.family == "circulant") f.kind = GraphFamily::Kind::Circulant;
  else fail(ErrorCode::InvalidGraph, "unknown family '" + o.family + "'");
  const Graph g = make_graph(f);
  emit_graph(s, o.out, g);
  return {{"family", o.family}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

// ---- product ------------------------------------------------------------

struct ProductOptions {
  std::string op = "cartesian";
  std::vector<std::string> files;
  std::string out;
  std::string coords;
};

json cmd_product(Session& s, const ProductOptions& o) {
  if (o.files.size() < 2) fail(ErrorCode::InvalidFactor, "product needs at least two factor files");
  if (o.files.size() > max_product_factors)
    fail(ErrorCode::SizeLimitExceeded, "at most " + std::to_string(max_product_factors) + " factors are accepted");
  const ProductKind op = parse_product_kind(o.op);
  std::vector<Graph> factors;
  for (const auto& f : o.files) factors.push_back(s.read_graph(f));
  const ProductGraph p = product(op, factors);
  emit_graph(s, o.out, p.graph);
  if (!o.coords.empty()) emit_coords(s, o.coords, p.coords);
  return {{"op", std::string(to_string(op))}, {"factors", o.files.size()}, {"vertices", p.graph.vertex_count()},
          {"edges", p.graph.edge_count()}};
}

// ---- factor -------------------------------------------------------------

struct FactorOptions {
  std::string file;
  std::string coords;
};

json cmd_factor(Session& s, const FactorOptions& o) {
  const Graph g = s.read_graph(o.file);
  const Factorization f = factorize(g);
  std::string stem = o.file;
  if (stem.size() > 4 && stem.ends_with(".col")) stem.resize(stem.size() - 4);
  json factors = json::array();
  Factorization reread{{}, f.coords, g};
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const std::string path = stem + ".factor" + std::to_string(i) + ".col";
    emit_graph(s, path, f.factors[i]);
    reread.factors.push_back(read_col_file(path));
    factors.push_back({{"file", path}, {"vertices", f.factors[i].vertex_count()}, {"edges", f.factors[i].edge_count()}});
  }
  if (!certify(reread)) throw VerificationFailure("written factors do not rebuild the input graph");
  if (!o.coords.empty()) emit_coords(s, o.coords, f.coords);
  return {{"factor_count", f.factors.size()}, {"factors", factors}, {"certified", true}};
}

// ---- oa -----------------------------------------------------------------

struct OaOptions {
  std::uint32_t g = 0;
  bool bush = false;
  std::string out;
};

json cmd_oa(Session& s, const OaOptions& o) {
  if (o.g < 2) fail(ErrorCode::InvalidAlphabet, "alphabet size must be at least 2");
  const OrthogonalArray oa = o.bush ? bush_oa(o.g) : oa_prime_power(o.g);
  const std::string path = o.out.empty() ? "oa" + std::to_string(o.g) + ".ca" : o.out;
  write_ca_file(path, from_orthogonal_array(oa));
  s.output(path);
  const CoveringArray back = read_ca_file(path);
  if (!is_orthogonal_array(OrthogonalArray{back.symbols, back.matrix}))
    throw VerificationFailure(path + ": re-read array is not an orthogonal array");
  return {{"kind", o.bush ? "composite" : "prime-power"}, {"rows", oa.rows()}, {"cols", oa.matrix.cols()},
          {"symbols", oa.symbols}};
}

// ---- build --------------------------------------------------------------

struct BuildOptions {
  std::string strategy;
  std::vector<std::string> graphs;
  std::uint32_t g = 0;
  std::string group;
  std::string conn_set;
  std::vector<std::string> ca_in;
  std::string out;
  std::string graph_out;
  std::string coords;
  std::optional<std::size_t> shift;
  std::string witness;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

FiniteGroup load_group(Session& s, const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    s.input(spec);
    return group_from_json(read_json_file(spec), spec);
  }
  return build_group(spec);
}

// A JSON file {"S": [...]} or an inline comma-separated list of names.
ConnectionSet load_connection_set(Session& s, const FiniteGroup& grp, const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    s.input(spec);
    return connection_set_from_json(grp, read_json_file(spec), spec);
  }
  json j;
  j["S"] = split_list(spec);
  return connection_set_from_json(grp, j, "--conn-set");
}

std::size_t element_named(const FiniteGroup& grp, const std::string& name) {
  const auto idx = grp.find(name);
  if (!idx) fail(ErrorCode::InvalidConnectionSet, "unknown group element '" + name + "'");
  return *idx;
}

class BuildContext {
 public:
  BuildContext(Session& s, const BuildOptions& o) : s_(s), o_(o) {}

  std::uint32_t symbols() const { return g_; }

  // Uses the explicit --g or the alphabet of the first supplied array.
  void resolve_symbols() {
    g_ = o_.g;
    if (g_ == 0 && !o_.ca_in.empty()) {
      cas_.push_back(load_ca(o_.ca_in.front()));
      g_ = static_cast<std::uint32_t>(cas_.front().symbols);
    }
    if (g_ < 2) fail(ErrorCode::InvalidAlphabet, "give --g >= 2 or an input array");
  }

  // Array for input `index` on `graph`: the supplied --ca-in file at that
  // position, otherwise the colouring construction.
  BoundArray input(std::size_t index, const Graph& graph) {
    CoveringArray ca;
    if (index < o_.ca_in.size()) {
      ca = index < cas_.size() ? cas_[index] : load_ca(o_.ca_in[index]);
      if (ca.symbols != g_)
        fail(ErrorCode::InvalidInputCA, o_.ca_in[index] + ": uses " + std::to_string(ca.symbols) +
                                            " symbols, expected " + std::to_string(g_));
      bind_by_labels(ca, graph);
    } else {
      ca = coloring_construction(graph, g_).ca;
      fallbacks_.push_back(index);
    }
    return {graph, std::move(ca)};
  }

  void annotate(ConstructionResult& r) const {
    for (auto i : fallbacks_)
      r.report.notes.push_back("input " + std::to_string(i) + " array built by the colouring construction");
  }

 private:
  CoveringArray load_ca(const std::string& path) {
    s_.input(path);
    return read_ca_file(path);
  }

  Session& s_;
  const BuildOptions& o_;
  std::uint32_t g_ = 0;
  std::vector<CoveringArray> cas_;
  std::vector<std::size_t> fallbacks_;
};

void require_graph_count(const BuildOptions& o, std::size_t min, std::size_t max) {
  if (o.graphs.size() < min || o.graphs.size() > max)
    fail(ErrorCode::PreconditionFailed, "strategy " + o.strategy + " takes " +
                                            (min == max ? std::to_string(min) : std::to_string(min) + ".." + std::to_string(max)) +
                                            " --graph argument(s), got " + std::to_string(o.graphs.size()));
}

json cmd_build(Session& s, const BuildOptions& o) {
  BuildContext ctx(s, o);
  ConstructionResult r;
  std::vector<Graph> graphs;
  const std::string& st = o.strategy;

  if (st == "approx") {
    require_graph_count(o, 1, 1);
    const Graph g = s.read_graph(o.graphs[0]);
    ctx.resolve_symbols();
    ApproxResult a = approx_ca(g, ctx.symbols());
    r.graph = g;
    r.ca = std::move(a.ca);
    r.report.strategy = "approx";
    r.report.output_size = r.ca.cols();
    r.report.lower_bound = std::size_t{ctx.symbols()} * ctx.symbols();
    r.report.notes = a.warnings;
    r.report.notes.push_back("u = " + std::to_string(a.u) + ", ratio bound = " + std::to_string(a.ratio_bound));
  } else if (st == "coloring") {
    require_graph_count(o, 1, 1);
    const Graph g = s.read_graph(o.graphs[0]);
    ctx.resolve_symbols();
    r = coloring_construction(g, ctx.symbols());
  } else if (st == "strong" || st == "box" || st == "direct" || st == "lex") {
    require_graph_count(o, 2, max_product_factors);
    for (const auto& path : o.graphs) graphs.push_back(s.read_graph(path));
    ctx.resolve_symbols();
    std::vector<BoundArray> inputs;
    for (std::size_t i = 0; i < graphs.size(); ++i) inputs.push_back(ctx.input(i, graphs[i]));
    if (st == "strong") r = strong_concat(inputs);
    else if (st == "box") r = box_or_direct_concat(inputs, ProductKind::Cartesian);
    else if (st == "direct") r = direct_min(inputs);
    else r = lex_concat(inputs);
  } else if (st == "cayley2") {
    ctx.resolve_symbols();
    if (!o.group.empty()) {
      require_graph_count(o, 1, 1);
      const FiniteGroup grp = load_group(s, o.group);
      const ConnectionSet set = load_connection_set(s, grp, o.conn_set);
      const Graph g1 = cayley_graph(grp, set);
      const Graph g2 = s.read_graph(o.graphs[0]);
      if (set.size() == 0) fail(ErrorCode::InvalidConnectionSet, "connection set is empty");
      const std::size_t elem = o.witness.empty() ? set.elements().front() : element_named(grp, o.witness);
      if (!set.contains(elem)) fail(ErrorCode::PreconditionFailed, "translating element is not in S");
      r = cayley_box_2color(ctx.input(0, g1), left_translation(grp, elem), g2);
    } else {
      require_graph_count(o, 2, 2);
      if (!o.shift) fail(ErrorCode::PreconditionFailed, "cayley2 needs --shift or --group/--conn-set");
      const Graph g1 = s.read_graph(o.graphs[0]);
      const Graph g2 = s.read_graph(o.graphs[1]);
      r = cayley_box_2color(ctx.input(0, g1), circulant_shift(g1.vertex_count(), *o.shift), g2);
    }
  } else if (st == "cayley3" || st == "cayley4") {
    require_graph_count(o, 1, 1);
    if (o.group.empty() || o.conn_set.empty())
      fail(ErrorCode::PreconditionFailed, st + " needs --group and --conn-set");
    ctx.resolve_symbols();
    const FiniteGroup grp = load_group(s, o.group);
    const ConnectionSet set = load_connection_set(s, grp, o.conn_set);
    const Graph g1 = cayley_graph(grp, set);
    const Graph g2 = s.read_graph(o.graphs[0]);
    std::optional<Witness> witness;
    if (!o.witness.empty()) {
      const auto names = split_list(o.witness);
      if (names.size() != 2) fail(ErrorCode::PreconditionFailed, "--witness takes two element names 's1,s2'");
      witness = Witness{element_named(grp, names[0]), element_named(grp, names[1])};
    } else {
      const auto report = check_connection_set(grp, set);
      witness = st == "cayley3" ? report.pair_s1s2 : report.pair_s1s2_and_s1s2inv;
      if (!witness) fail(ErrorCode::PreconditionFailed, "no witness pair (s1, s2) exists in S");
    }
    const BoundArray in = ctx.input(0, g1);
    r = st == "cayley3" ? cayley_box_3color(in, grp, set, *witness, g2)
                        : cayley_box_4color(in, grp, set, *witness, g2);
    r.report.notes.push_back("witness s1 = " + grp.name(witness->first) + ", s2 = " + grp.name(witness->second));
  } else {
    fail(ErrorCode::PreconditionFailed, "unknown strategy '" + st + "'");
  }

  ctx.annotate(r);
  emit_ca(s, o.out, r.ca, r.graph);
  if (!o.graph_out.empty()) emit_graph(s, o.graph_out, r.graph);
  if (!o.coords.empty()) emit_coords(s, o.coords, r.coords);
  return construction_json(r);
}

// ---- approx -------------------------------------------------------------

struct ApproxOptions {
  std::string graph;
  std::uint32_t g = 0;
  std::string out;
  std::string report;
};

json approx_json(const ApproxResult& a) {
  const auto cert = ratio_certificate(a);
  json factors = json::array();
  for (const auto& f : a.factorization.factors)
    factors.push_back({{"vertices", f.vertex_count()}, {"edges", f.edge_count()}});
  return {{"size", a.ca.cols()},
          {"symbols", a.ca.symbols},
          {"s", a.s},
          {"u", a.u},
          {"v1", a.v1},
          {"k", a.k},
          {"ratio_bound", a.ratio_bound},
          {"achieved_multiplier", a.achieved_multiplier},
          {"lower_bound", a.ca.symbols * a.ca.symbols},
          {"within_bound", cert.within_bound},
          {"tight", cert.tight},
          {"factors", factors},
          {"warnings", cert.warnings}};
}

json cmd_approx(Session& s, const ApproxOptions& o) {
  const Graph g = s.read_graph(o.graph);
  const ApproxResult a = approx_ca(g, o.g);
  emit_ca(s, o.out, a.ca, g);
  json report = approx_json(a);
  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) fail(ErrorCode::ParseError, o.report + ": cannot open file for writing");
    f << report.dump(2) << '\n';
    s.output(o.report);
  }
  return report;
}

// ---- verify -------------------------------------------------------------

struct VerifyOptions {
  std::string graph;
  std::string ca;
};

json cmd_verify(Session& s, const VerifyOptions& o, std::ostream& err, bool& ok) {
  const Graph g = s.read_graph(o.graph);
  s.input(o.ca);
  CoveringArray ca = read_ca_file(o.ca);
  bind_by_labels(ca, g);
  const auto report = verify_ca(ca, g);
  ok = report.ok;
  for (const auto& f : report.failing_edges)
    err << "edge {" << g.label(f.edge.u) << "," << g.label(f.edge.v) << "} misses pair (" << f.missing_first << ","
        << f.missing_second << ")\n";
  return {{"ok", report.ok}, {"rows", ca.rows()}, {"cols", ca.cols()}, {"symbols", ca.symbols},
          {"failing_edges", failing_edges_json(report, g)}};
}

// ---- analyze ------------------------------------------------------------

struct AnalyzeOptions {
  std::string graph;
  std::uint32_t g = 0;
};

json cmd_analyze(Session& s, const AnalyzeOptions& o, std::ostream& err) {
  const Limits limits = read_limits();
  const Graph g = s.read_graph(o.graph);
  json r = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  const auto greedy = greedy_coloring(g).color_count;
  r["greedy_chi"] = greedy;
  std::optional<std::size_t> omega, chi;
  if (g.vertex_count() <= limits.omega) omega = max_clique(g, limits.omega);
  else err << "clique search skipped: " << g.vertex_count() << " vertices exceed limit " << limits.omega << '\n';
  if (g.vertex_count() <= limits.chi) chi = exact_chromatic_number(g, limits.chi);
  else err << "exact colouring skipped: " << g.vertex_count() << " vertices exceed limit " << limits.chi << '\n';
  r["omega"] = omega ? json(*omega) : json(nullptr);
  r["exact_chi"] = chi ? json(*chi) : json(nullptr);
  const std::string gs = o.g ? std::to_string(o.g) : "g";
  const std::string lower = omega ? std::to_string(*omega) : "ω";
  const std::string upper = std::to_string(chi ? *chi : greedy);
  r["sandwich"] = "CAN(K_" + lower + "," + gs + ") ≤ CAN(G," + gs + ") ≤ CAN(K_" + upper + "," + gs + ")";
  if (o.g >= 2) {
    r["lower_bound"] = std::size_t{o.g} * o.g;
    r["upper_bound"] = generic_ca(chi ? *chi : greedy, o.g).cols();
  }
  return r;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConstructionFailed:
    case ErrorCode::InternalFactorizationError: return VerificationFailed;
    default: return UsageError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering arrays on graphs", "graphca"};
  app.require_subcommand(1);

  MakeOptions make_o;
  auto* make = app.add_subcommand("make", "Write a generated graph");
  make->add_option("--family", make_o.family, "path|cycle|complete|circulant")->required();
  make->add_option("--n", make_o.n, "Vertex count")->required();
  make->add_option("--set", make_o.set, "Circulant connection set")->delimiter(',');
  make->add_option("-o,--out", make_o.out, "Output .col file")->required();

  ProductOptions product_o;
  auto* prod = app.add_subcommand("product", "Graph product of two or more factors");
  prod->add_option("--op", product_o.op, "cartesian|direct|strong|lex");
  prod->add_option("files", product_o.files, "Factor .col files")->required();
  prod->add_option("-o,--out", product_o.out, "Output .col file")->required();
  prod->add_option("--coords", product_o.coords, "Write vertex coordinates");

  FactorOptions factor_o;
  auto* fac = app.add_subcommand("factor", "Cartesian prime factorization");
  fac->add_option("file", factor_o.file, "Input .col file")->required();
  fac->add_option("--coords", factor_o.coords, "Write vertex coordinates");

  OaOptions oa_o;
  auto* oa = app.add_subcommand("oa", "Write an orthogonal array");
  oa->add_option("--g", oa_o.g, "Alphabet size")->required();
  oa->add_flag("--bush", oa_o.bush, "Composite construction for any g");
  oa->add_option("-o,--out", oa_o.out, "Output file (default oa<g>.ca)");

  BuildOptions build_o;
  auto* build = app.add_subcommand("build", "Construct a covering array");
  build->add_option("--strategy", build_o.strategy, "strong|box|direct|lex|coloring|cayley2|cayley3|cayley4|approx")
      ->required();
  build->add_option("--graph", build_o.graphs, "Input .col file (repeatable)");
  build->add_option("--g", build_o.g, "Alphabet size");
  build->add_option("--group", build_o.group, "Group JSON file or cyclic:m|dihedral:2m|quaternion8|symmetric:m");
  build->add_option("--conn-set", build_o.conn_set, "Connection set JSON file or comma-separated names");
  build->add_option("--ca-in", build_o.ca_in, "Input array per factor (repeatable)");
  build->add_option("--out", build_o.out, "Output .ca file")->required();
  build->add_option("--graph-out", build_o.graph_out, "Write the output graph");
  build->add_option("--coords", build_o.coords, "Write product coordinates");
  build->add_option("--shift", build_o.shift, "cayley2: circulant automorphism k -> k+shift");
  build->add_option("--witness", build_o.witness, "cayley3/4: 's1,s2'; cayley2: translating element");

  ApproxOptions approx_o;
  auto* approx = app.add_subcommand("approx", "Factorization-based approximation");
  approx->add_option("--graph", approx_o.graph, "Input .col file")->required();
  approx->add_option("--g", approx_o.g, "Alphabet size")->required();
  approx->add_option("-o,--out", approx_o.out, "Output .ca file")->required();
  approx->add_option("--report", approx_o.report, "Also write the report JSON here");

  VerifyOptions verify_o;
  auto* verify = app.add_subcommand("verify", "Check a covering array against a graph");
  verify->add_option("--graph", verify_o.graph, "Graph .col file")->required();
  verify->add_option("--ca", verify_o.ca, "Array .ca file")->required();

  AnalyzeOptions analyze_o;
  auto* analyze = app.add_subcommand("analyze", "Clique and chromatic bounds");
  analyze->add_option("--graph", analyze_o.graph, "Graph .col file")->required();
  analyze->add_option("--g", analyze_o.g, "Alphabet size for the numeric bounds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? Success : UsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  Session session;
  json report;
  std::string command;
  int rc = Success;
  try {
    if (*make) command = "make", report = cmd_make(session, make_o);
    else if (*prod) command = "product", report = cmd_product(session, product_o);
    else if (*fac) command = "factor", report = cmd_factor(session, factor_o);
    else if (*oa) command = "oa", report = cmd_oa(session, oa_o);
    else if (*build) command = "build", report = cmd_build(session, build_o);
    else if (*approx) command = "approx", report = cmd_approx(session, approx_o);
    else if (*verify) {
      command = "verify";
      bool ok = true;
      report = cmd_verify(session, verify_o, err, ok);
      if (!ok) rc = VerificationFailed;
    } else if (*analyze) command = "analyze", report = cmd_analyze(session, analyze_o, err);
  } catch (const VerificationFailure& e) {
    err << "graphca: verification failed: " << e.what() << '\n';
    return VerificationFailed;
  } catch (const Error& e) {
    err << "graphca: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "graphca: " << e.what() << '\n';
    return UsageError;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  json full = {{"command", command},
               {"inputs", session.inputs()},
               {"outputs", session.outputs()},
               {"report", report},
               {"wall_time_ms", ms}};
  out << full.dump(2) << '\n';
  return rc;
}

}  // namespace graphca::cli
