#include "dispatch.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "c4book/digest.hpp"
#include "c4book/enumerate.hpp"
#include "c4book/error.hpp"
#include "c4book/geometry.hpp"
#include "c4book/graph6.hpp"
#include "c4book/probe.hpp"
#include "c4book/subgraph_search.hpp"
#include "json_io.hpp"
#include "manifest.hpp"

namespace c4book::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string format = "json";
  unsigned jobs = 1;
  std::string manifest_path;
  RunManifest manifest;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << bytes)) throw UsageError("cannot write '" + path + "'");
}

Graph read_graph(Context& ctx, const std::string& path) {
  const std::string bytes = read_file(path);
  ctx.manifest.add_input(path, bytes);
  return g6_decode(bytes);
}

std::uint64_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(value) || value < 0 || value > 1.8e19 || value != std::floor(value)) {
    throw UsageError(std::string(what) + " must be a non-negative integer (e.g. 1e7), got '" + text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

int emit(Context& ctx, const std::string& command, Json body, int code) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  for (auto& [key, value] : body.items()) doc[key] = std::move(value);
  const std::string text = ctx.format == "table" ? render_table(doc) : doc.dump(2) + "\n";
  ctx.out << text;
  ctx.manifest.add_output("stdout", text);
  const std::string manifest = ctx.manifest.to_json().dump() + "\n";
  if (ctx.manifest_path.empty()) {
    ctx.err << manifest;
  } else {
    write_file(ctx.manifest_path, manifest);
  }
  return code;
}

gf::PrimePower require_prime_power(std::uint64_t q) {
  gf::PrimePower pp{};
  if (!gf::prime_power(q, pp)) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return pp;
}

bool plausible_polarity_graph(const Graph& g, std::uint64_t q) {
  if (g.order() != q * q + q + 1 || !is_c4_free(g).c4_free) return false;
  std::size_t low = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    if (d != q && d != q + 1) return false;
    if (d == q) ++low;
  }
  return low == q + 1;
}

// ER_q, read from $RAMSEY_BOOK_CACHE/er_q<q>.g6 when present and sane.
Graph load_er(Context& ctx, std::uint64_t q) {
  const gf::PrimePower pp = require_prime_power(q);
  const char* dir = std::getenv("RAMSEY_BOOK_CACHE");
  std::filesystem::path cached;
  if (dir != nullptr && *dir != '\0') {
    cached = std::filesystem::path(dir) / ("er_q" + std::to_string(q) + ".g6");
    std::ifstream in(cached, std::ios::binary);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        Graph g = g6_decode(buf.str());
        if (plausible_polarity_graph(g, q) && g == geometry::er_graph(gf::Field(pp.p, pp.e))) return g;
      } catch (const Error&) {
      }
      ctx.err << "warning: ignoring stale cache entry " << cached.string() << "\n";
    }
  }
  Graph g = geometry::er_graph(gf::Field(pp.p, pp.e));
  if (!cached.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cached.parent_path(), ec);
    std::ofstream out(cached, std::ios::binary);
    if (out) out << g6_encode(g) << '\n';
  }
  return g;
}

std::string book_claim(std::int64_t n, std::size_t k) {
  return "r(C4,B_" + std::to_string(n) + "^(" + std::to_string(k) + "))";
}

int cmd_field(Context& ctx, std::uint64_t p, unsigned e, bool table, std::uint64_t cap) {
  const gf::Field field(p, e, cap);
  if (table && field.q() > 64) throw UsageError("--table is limited to q <= 64");
  return emit(ctx, "field", {{"field", to_json(field, table)}}, kExitVerified);
}

int cmd_er(Context& ctx, std::uint64_t q, const std::string& out_path, bool stats) {
  const Graph g = load_er(ctx, q);
  const gf::PrimePower pp = require_prime_power(q);
  Json body;
  body["q"] = q;
  body["bilinear_form"] = std::string(geometry::kBilinearForm);
  body["order"] = g.order();
  body["size"] = g.size();
  const std::string g6 = g6_encode(g);
  body["graph_hash"] = sha256_hex(g6);
  if (out_path.empty()) {
    body["graph6"] = g6;
  } else {
    write_file(out_path, g6 + "\n");
    ctx.manifest.add_output(out_path, g6 + "\n");
    body["out"] = out_path;
  }
  if (stats) {
    body["c4_free"] = is_c4_free(g).c4_free;
    body["degrees"] = degree_json(degree_profile(g));
    body["absolute_points"] = geometry::absolute_points(gf::Field(pp.p, pp.e));
  }
  return emit(ctx, "er", std::move(body), kExitVerified);
}

int cmd_check(Context& ctx, const std::string& path, bool c4, bool kst, bool friendship) {
  const Graph g = read_graph(ctx, path);
  if (!c4 && !kst && !friendship) c4 = kst = friendship = true;
  Json body;
  body["order"] = g.order();
  body["size"] = g.size();
  body["graph_hash"] = graph_digest(g);
  body["degrees"] = degree_json(degree_profile(g));
  if (c4) body["c4"] = to_json(is_c4_free(g));
  if (kst) body["kst"] = to_json(kst_check(g));
  if (friendship) {
    const auto k = is_friendship(g);
    body["friendship"] = k ? Json(*k) : Json(nullptr);
  }
  return emit(ctx, "check", std::move(body), kExitVerified);
}

int cmd_verify(Context& ctx, const std::string& path, std::size_t k, std::int64_t n) {
  if (k == 0) throw UsageError("--k must be positive");
  const Graph g = read_graph(ctx, path);
  const auto N = static_cast<std::int64_t>(g.order());
  Json body;
  body["claim"] = book_claim(n, k) + " >= " + std::to_string(N + 1);
  const C4Check c4 = is_c4_free(g);
  body["c4"] = to_json(c4);
  bool verified = c4.c4_free;
  if (c4.c4_free && k <= g.order()) {
    const BookNumber book = complement_book_number(g, k, ctx.jobs);
    body["book"] = to_json(book);
    verified = !book.has_spine || static_cast<std::int64_t>(book.nmax) < n;
  }
  body["verified"] = verified;
  if (verified) {
    body["certificate"] = {{"order", g.order()},
                           {"graph_hash", graph_digest(g)},
                           {"graph6", g6_encode(g)},
                           {"bound", book_claim(n, k) + " >= " + std::to_string(N + 1)}};
  } else {
    body["reason"] = !c4.c4_free ? "graph contains a C4" : "complement contains " + book_claim(n, k).substr(6);
  }
  return emit(ctx, "verify", std::move(body), verified ? kExitVerified : kExitRefuted);
}

int cmd_certify(Context& ctx, const std::string& path, std::size_t k, const std::string& note) {
  if (k == 0) throw UsageError("--k must be positive");
  const Graph g = read_graph(ctx, path);
  try {
    const auto cert = certify_lower_bound(g, k, note, ctx.jobs);
    return emit(ctx, "certify", {{"certificate", to_json(cert)}}, kExitVerified);
  } catch (const Error& e) {
    if (e.code() != Errc::NotC4Free) throw;
    return emit(ctx, "certify", {{"status", "not_c4_free"}, {"c4", to_json(is_c4_free(g))}, {"message", e.what()}},
                kExitRefuted);
  }
}

int cmd_bounds(Context& ctx, std::optional<std::int64_t> n, std::optional<int> k, std::optional<std::int64_t> q,
               std::optional<std::int64_t> t, std::optional<std::string> eps, const std::vector<std::string>& table) {
  if (!table.empty()) {
    const auto qmin = static_cast<std::int64_t>(parse_count(table[0], "qmin"));
    const auto qmax = static_cast<std::int64_t>(parse_count(table[1], "qmax"));
    const auto kk = static_cast<int>(parse_count(table[2], "k"));
    const auto e = bounds::parse_rational(table[3]);
    Json rows = Json::array();
    for (const auto& v : bounds::predicted_table(qmin, qmax, kk, e)) rows.push_back(to_json(v));
    return emit(ctx, "bounds", {{"k", kk}, {"eps", bounds::to_string(e)}, {"predicted", std::move(rows)}},
                kExitVerified);
  }
  if (!n || !k) throw UsageError("bounds needs --n and --k, or --table QMIN QMAX K EPS");
  Json body;
  body["report"] = to_json(bounds::bound_report(*n, *k));
  if (q || t || eps) {
    if (!q || !t || !eps) throw UsageError("--q, --t and --eps go together");
    const auto e = bounds::parse_rational(*eps);
    body["params"] = to_json(bounds::bounds_params(*k, *q, *t, e));
    body["admissibility"] = to_json(bounds::exact_value_admissible(*k, *q, *t, e));
  }
  return emit(ctx, "bounds", std::move(body), kExitVerified);
}

int cmd_er_subgraph(Context& ctx, std::uint64_t q, std::size_t order, std::size_t min_deg, std::uint64_t budget,
                    std::size_t k, const std::string& out_path) {
  const Graph er = load_er(ctx, q);
  Json body;
  body["q"] = q;
  body["order"] = order;
  body["min_degree"] = min_deg;
  body["budget"] = budget;
  SubgraphSearchStats stats;
  std::optional<std::vector<Vertex>> found;
  std::string status;
  try {
    found = greedy_min_degree_subgraph(er, order, min_deg, budget, &stats);
    status = found ? "found" : "infeasible";
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExhausted) throw;
    status = "budget_exhausted";
  }
  body["status"] = status;
  body["nodes"] = stats.nodes;
  body["restarts"] = stats.restarts;
  if (!found) return emit(ctx, "construct er-subgraph", std::move(body), kExitRefuted);

  std::vector<Vertex> deleted;
  for (Vertex v = 0, j = 0; v < er.order(); ++v) {
    if (j < found->size() && (*found)[j] == v) {
      ++j;
    } else {
      deleted.push_back(v);
    }
  }
  const Graph sub = induced_subgraph(er, *found);
  std::string note = "induced subgraph of ER_" + std::to_string(q) + ", deleted vertices [";
  for (std::size_t i = 0; i < deleted.size(); ++i) note += (i ? "," : "") + std::to_string(deleted[i]);
  note += "]";
  body["vertices"] = *found;
  body["deleted"] = deleted;
  const auto cert = certify_lower_bound(sub, k, note, ctx.jobs);
  if (!out_path.empty()) {
    write_file(out_path, cert.graph6 + "\n");
    ctx.manifest.add_output(out_path, cert.graph6 + "\n");
    body["out"] = out_path;
  }
  body["certificate"] = to_json(cert);
  return emit(ctx, "construct er-subgraph", std::move(body), kExitVerified);
}

int cmd_random_delete(Context& ctx, std::int64_t n, std::size_t k, std::uint64_t seed, DeletionOverrides overrides,
                      const std::string& out_path) {
  ctx.manifest.add_seed(seed);
  overrides.jobs = ctx.jobs;
  try {
    const auto result = random_delete_construction(n, k, seed, overrides);
    Json body;
    body["status"] = "found";
    body["run"] = to_json(result.run);
    body["certificate"] = to_json(result.certificate);
    if (!out_path.empty()) {
      write_file(out_path, result.certificate.graph6 + "\n");
      ctx.manifest.add_output(out_path, result.certificate.graph6 + "\n");
      body["out"] = out_path;
    }
    return emit(ctx, "construct random-delete", std::move(body), kExitVerified);
  } catch (const RegimeError& e) {
    return emit(ctx, "construct random-delete",
                {{"status", "asymptotic_regime_not_reached"}, {"min_n", e.min_n()}, {"message", e.what()}},
                kExitRefuted);
  } catch (const Error& e) {
    if (e.code() != Errc::AttemptsExhausted) throw;
    return emit(ctx, "construct random-delete", {{"status", "attempts_exhausted"}, {"message", e.what()}},
                kExitRefuted);
  }
}

int cmd_search_exact(Context& ctx, std::size_t k, std::int64_t n, std::size_t order, bool prune) {
  if (k == 0) throw UsageError("--k must be positive");
  const auto result = search_ramsey_exact(order, k, n, ctx.jobs, prune);
  Json body;
  body["proof"] = to_json(result.proof);
  const auto N = static_cast<std::int64_t>(order);
  if (result.witness) {
    body["outcome"] = "witness";
    body["graph6"] = g6_encode(*result.witness);
    body["conclusion"] = book_claim(n, k) + " >= " + std::to_string(N + 1);
  } else {
    body["outcome"] = "exhausted";
    body["graph6"] = nullptr;
    body["conclusion"] = book_claim(n, k) + " <= " + std::to_string(N);
  }
  return emit(ctx, "search exact", std::move(body), result.witness ? kExitVerified : kExitRefuted);
}

int cmd_search_gq(Context& ctx, std::uint64_t q, std::uint64_t budget, std::uint64_t seed) {
  ctx.manifest.add_seed(seed);
  ProbeStats stats;
  const auto found = probe_gq(q, budget, seed, &stats);
  Json body;
  body["q"] = q;
  body["order"] = q * q + q + 3;
  body["n"] = q * q - q + 1;
  body["budget"] = budget;
  body["seed"] = seed;
  body["steps"] = stats.steps;
  body["restarts"] = stats.restarts;
  body["best_objective"] = stats.best_objective;
  body["found"] = found.has_value();
  body["graph6"] = found ? Json(g6_encode(*found)) : Json(nullptr);
  body["note"] = found ? "verified member of G(q)" : "no witness found within budget; this is not a proof of emptiness";
  return emit(ctx, "search gq", std::move(body), found ? kExitVerified : kExitRefuted);
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::NonPrimeCharacteristic:
    case Errc::CapExceeded:
    case Errc::MalformedGraph6:
    case Errc::DomainError:
    case Errc::NotPrimePower:
    case Errc::EmptyQuerySet:
      return true;
    default:
      return false;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> command_line{"c4book"};
  command_line.insert(command_line.end(), args.begin(), args.end());
  Context ctx{out, err, "json", 1, {}, RunManifest(command_line)};

  CLI::App app{"Constructions, certificates and exact searches for r(C4, B_n^(k))", "c4book"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", ctx.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
  app.add_option("--manifest", ctx.manifest_path, "Write the run manifest here instead of stderr");

  std::function<int()> action;

  auto* field = app.add_subcommand("field", "Finite field GF(p^e)");
  std::uint64_t field_p = 0;
  unsigned field_e = 0;
  bool field_table = false;
  std::string field_cap = std::to_string(gf::kDefaultCap);
  field->add_option("p", field_p, "Characteristic")->required();
  field->add_option("e", field_e, "Extension degree")->required();
  field->add_flag("--table", field_table, "Include addition and multiplication tables (q <= 64)");
  field->add_option("--cap", field_cap, "Largest admissible order");
  field->callback([&] {
    action = [&] { return cmd_field(ctx, field_p, field_e, field_table, parse_count(field_cap, "--cap")); };
  });

  auto* er = app.add_subcommand("er", "Orthogonal polarity graph ER_q");
  std::uint64_t er_q = 0;
  std::string er_out;
  bool er_stats = false;
  er->add_option("q", er_q, "Prime power")->required();
  er->add_option("--out", er_out, "Write graph6 here");
  er->add_flag("--stats", er_stats, "Degree histogram and absolute points");
  er->callback([&] { action = [&] { return cmd_er(ctx, er_q, er_out, er_stats); }; });

  auto* check = app.add_subcommand("check", "Structural report for a graph6 file");
  std::string check_file;
  bool check_c4 = false;
  bool check_kst = false;
  bool check_friendship = false;
  check->add_option("file", check_file, "graph6 file, - for stdin")->required();
  check->add_flag("--c4", check_c4, "C4 test with witness");
  check->add_flag("--kst", check_kst, "Pair-counting inequalities");
  check->add_flag("--friendship", check_friendship, "Every-pair-one-common-neighbour test");
  check->callback([&] { action = [&] { return cmd_check(ctx, check_file, check_c4, check_kst, check_friendship); }; });

  auto* verify = app.add_subcommand("verify", "Check a Ramsey witness for (C4, B_n^(k))");
  std::string verify_file;
  std::size_t verify_k = 0;
  std::int64_t verify_n = 0;
  verify->add_option("file", verify_file, "graph6 file, - for stdin")->required();
  verify->add_option("--k", verify_k, "Spine size")->required();
  verify->add_option("--n", verify_n, "Page count")->required();
  verify->callback([&] { action = [&] { return cmd_verify(ctx, verify_file, verify_k, verify_n); }; });

  auto* certify = app.add_subcommand("certify", "Minimum-degree lower-bound certificate");
  std::string certify_file;
  std::size_t certify_k = 0;
  std::string certify_note;
  certify->add_option("file", certify_file, "graph6 file, - for stdin")->required();
  certify->add_option("--k", certify_k, "Spine size")->required();
  certify->add_option("--note", certify_note, "Construction note recorded in the certificate");
  certify->callback([&] { action = [&] { return cmd_certify(ctx, certify_file, certify_k, certify_note); }; });

  auto* bnds = app.add_subcommand("bounds", "Known bounds and parameter formulas");
  std::optional<std::int64_t> b_n;
  std::optional<int> b_k;
  std::optional<std::int64_t> b_q;
  std::optional<std::int64_t> b_t;
  std::optional<std::string> b_eps;
  std::vector<std::string> b_table;
  bnds->add_option("--n", b_n, "Page count");
  bnds->add_option("--k", b_k, "Spine size");
  bnds->add_option("--q", b_q, "Prime power for the parameter ladder");
  bnds->add_option("--t", b_t, "Offset t");
  bnds->add_option("--eps", b_eps, "Rational in (0,1), e.g. 3/10 or 0.3");
  bnds->add_option("--table", b_table, "QMIN QMAX K EPS: predicted exact values")->expected(4);
  bnds->callback([&] { action = [&] { return cmd_bounds(ctx, b_n, b_k, b_q, b_t, b_eps, b_table); }; });

  auto* construct = app.add_subcommand("construct", "Build lower-bound graphs");
  construct->require_subcommand(1);
  auto* ers = construct->add_subcommand("er-subgraph", "Induced subgraph of ER_q with a minimum degree");
  std::uint64_t ers_q = 0;
  std::size_t ers_order = 0;
  std::size_t ers_min = 0;
  std::size_t ers_k = 3;
  std::string ers_budget = "1e7";
  std::string ers_out;
  ers->add_option("--q", ers_q, "Prime power")->required();
  ers->add_option("--order", ers_order, "Vertices to keep")->required();
  ers->add_option("--min-deg", ers_min, "Minimum degree")->required();
  ers->add_option("--budget", ers_budget, "Search node budget");
  ers->add_option("--k", ers_k, "Spine size for the certificate");
  ers->add_option("--out", ers_out, "Write graph6 here");
  ers->callback([&] {
    action = [&] {
      return cmd_er_subgraph(ctx, ers_q, ers_order, ers_min, parse_count(ers_budget, "--budget"), ers_k, ers_out);
    };
  });

  auto* rdel = construct->add_subcommand("random-delete", "Random deletion from ER_p");
  std::int64_t rd_n = 0;
  std::size_t rd_k = 0;
  std::uint64_t rd_seed = 1;
  std::optional<std::int64_t> rd_m;
  std::optional<std::string> rd_c;
  std::optional<std::string> rd_alpha;
  std::string rd_attempts = "1000";
  std::string rd_out;
  rdel->add_option("--n", rd_n, "Page count")->required();
  rdel->add_option("--k", rd_k, "Spine size")->required();
  rdel->add_option("--seed", rd_seed, "Master seed");
  rdel->add_option("--m", rd_m, "Override the degree floor");
  rdel->add_option("--c", rd_c, "Override the constant 6");
  rdel->add_option("--alpha", rd_alpha, "Override the exponent 21/80");
  rdel->add_option("--max-attempts", rd_attempts, "Attempts before giving up");
  rdel->add_option("--out", rd_out, "Write graph6 here");
  rdel->callback([&] {
    action = [&] {
      DeletionOverrides o;
      o.m = rd_m;
      if (rd_c) o.c = bounds::parse_rational(*rd_c);
      if (rd_alpha) o.alpha = bounds::parse_rational(*rd_alpha);
      o.max_attempts = parse_count(rd_attempts, "--max-attempts");
      return cmd_random_delete(ctx, rd_n, rd_k, rd_seed, o, rd_out);
    };
  });

  auto* search = app.add_subcommand("search", "Exhaustive and heuristic searches");
  search->require_subcommand(1);
  auto* exact = search->add_subcommand("exact", "Decide whether a Ramsey witness exists on N vertices");
  std::size_t ex_k = 0;
  std::int64_t ex_n = 0;
  std::size_t ex_order = 0;
  bool ex_no_prune = false;
  exact->add_option("--k", ex_k, "Spine size")->required();
  exact->add_option("--n", ex_n, "Page count")->required();
  exact->add_option("--N", ex_order, "Number of vertices")->required();
  exact->add_flag("--no-prune", ex_no_prune, "Disable the minimum-degree pruner");
  exact->callback([&] { action = [&] { return cmd_search_exact(ctx, ex_k, ex_n, ex_order, !ex_no_prune); }; });

  auto* gq = search->add_subcommand("gq", "Local search for a member of G(q)");
  std::uint64_t gq_q = 0;
  std::string gq_budget = "1e8";
  std::uint64_t gq_seed = 1;
  gq->add_option("--q", gq_q, "Prime power, q^2+q+3 <= 64")->required();
  gq->add_option("--budget", gq_budget, "Step budget");
  gq->add_option("--seed", gq_seed, "Seed");
  gq->callback([&] { action = [&] { return cmd_search_gq(ctx, gq_q, parse_count(gq_budget, "--budget"), gq_seed); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitVerified;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'c4book --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (!action) throw UsageError("no command given");
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "input error: " << e.what() << " (byte offset " << e.offset() << ")\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (is_input_error(e.code())) {
      err << "input error: " << e.what() << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
  }
}

}  // namespace c4book::cli
