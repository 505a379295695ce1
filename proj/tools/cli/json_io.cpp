#include "json_io.hpp"

#include <algorithm>
#include <sstream>

namespace c4book::cli {

Json to_json(const gf::Field& field, bool tables) {
  Json j;
  j["p"] = field.p();
  j["e"] = field.e();
  j["q"] = field.q();
  j["modulus"] = field.modulus_string();
  Json elements = Json::array();
  for (const auto& x : field.elements()) elements.push_back(x.to_string());
  j["elements"] = std::move(elements);
  if (tables) {
    const auto t = gf::make_tables(field);
    Json add = Json::array();
    Json mul = Json::array();
    for (std::uint64_t a = 0; a < t.q; ++a) {
      Json add_row = Json::array();
      Json mul_row = Json::array();
      for (std::uint64_t b = 0; b < t.q; ++b) {
        add_row.push_back(t.plus(a, b));
        mul_row.push_back(t.times(a, b));
      }
      add.push_back(std::move(add_row));
      mul.push_back(std::move(mul_row));
    }
    j["addition"] = std::move(add);
    j["multiplication"] = std::move(mul);
  }
  return j;
}

Json degree_json(const DegreeProfile& profile) {
  Json j;
  j["min_degree"] = profile.min_degree;
  j["max_degree"] = profile.max_degree;
  Json hist = Json::object();
  for (const auto& [degree, count] : profile.histogram) hist[std::to_string(degree)] = count;
  j["histogram"] = std::move(hist);
  return j;
}

Json to_json(const C4Check& check) {
  Json j;
  j["c4_free"] = check.c4_free;
  j["witness"] = check.witness ? Json(*check.witness) : Json(nullptr);
  return j;
}

Json to_json(const KstReport& r) {
  Json j;
  j["lhs"] = r.lhs;
  j["rhs_basic"] = r.rhs_basic;
  j["pairs_without_two_path"] = r.pairs_without_two_path;
  j["rhs_refined"] = r.rhs_refined;
  j["holds_basic"] = r.holds_basic;
  j["holds_refined"] = r.holds_refined;
  return j;
}

Json to_json(const BookNumber& book) {
  Json j;
  j["nmax"] = book.nmax;
  j["has_spine"] = book.has_spine;
  j["spine"] = book.witness.spine;
  j["pages"] = book.witness.pages;
  return j;
}

Json to_json(const LowerBoundCertificate& cert) {
  Json j;
  j["graph_hash"] = cert.graph_hash;
  j["graph6"] = cert.graph6;
  j["order"] = cert.order;
  j["spine"] = cert.spine;
  j["min_degree"] = cert.min_degree;
  j["c4_free"] = cert.c4_free;
  j["guaranteed_book_free_n"] = cert.guaranteed_book_free_n;
  j["implied_bound"] = cert.implied_bound;
  j["construction_note"] = cert.construction_note;
  j["cross_checked_nmax"] = cert.cross_checked_nmax ? Json(*cert.cross_checked_nmax) : Json(nullptr);
  return j;
}

Json to_json(const bounds::BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["lower"] = {{"value", r.lower.value}, {"provenance", r.lower.provenance}};
  j["upper"] = {{"value", r.upper.value}, {"provenance", r.upper.provenance}};
  j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  j["asymptotic_lower"] = {{"value", r.asymptotic.value},
                           {"floor_term", r.asymptotic.floor_term},
                           {"regime_reached", r.asymptotic.regime_reached}};
  return j;
}

Json to_json(const bounds::BoundsParams& p) {
  Json j;
  j["k"] = p.k;
  j["q"] = p.q;
  j["t"] = p.t;
  j["eps"] = bounds::to_string(p.eps);
  j["a_k"] = p.a_k;
  j["b_k"] = p.b_k;
  j["n"] = p.n;
  j["ladder"] = p.ladder;
  j["Q"] = bounds::to_string(p.Q);
  j["q_at_least_Q"] = p.q_at_least_Q;
  j["t_in_range"] = p.t_in_range;
  return j;
}

Json to_json(const bounds::Admissibility& a) { return {{"admissible", a.admissible}, {"reason", a.reason}}; }

Json to_json(const bounds::PredictedValue& v) { return {{"q", v.q}, {"t", v.t}, {"n", v.n}, {"value", v.value}}; }

Json to_json(const DeletionRun& run) {
  Json j;
  j["n"] = run.n;
  j["k"] = run.k;
  j["alpha"] = bounds::to_string(run.alpha);
  j["c"] = bounds::to_string(run.c);
  j["m"] = run.m;
  j["m_overridden"] = run.m_overridden;
  j["p"] = run.p;
  j["N"] = run.N;
  j["d"] = run.d;
  j["seed"] = run.seed;
  j["attempts"] = run.attempts;
  j["deleted"] = run.deleted;
  j["graph_hash"] = run.graph_hash;
  j["prime_note"] = run.prime_note;
  return j;
}

Json to_json(const ExhaustionProof& proof) {
  Json j;
  j["order"] = proof.order;
  j["k"] = proof.k;
  j["n"] = proof.n;
  j["graphs_examined"] = proof.graphs_examined;
  j["pruned"] = proof.pruned;
  j["all_rejected"] = proof.all_rejected;
  j["generator_version"] = std::string(proof.generator_version);
  return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  const bool scalar_array =
      j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, rows);
  } else if (j.is_array() && !scalar_array) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(path, j.get<std::string>());
  } else {
    rows.emplace_back(path, j.dump());
  }
}

}  // namespace

std::string render_table(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  }
  return out.str();
}

}  // namespace c4book::cli
