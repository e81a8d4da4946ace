#include "document.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cycert/ffield.hpp"

namespace cycert::cli {

namespace {

ordered_json elem_to_json(const FieldElem& a) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < a.level; ++i) arr.push_back(a.c[i]);
  return arr;
}

ordered_json tower_to_json(const FieldTower& tower) {
  ordered_json t;
  t["q"] = tower.q();
  t["quadratic"] = tower.quad_poly();
  if (tower.has_quartic_level())
    t["quartic"] = tower.quartic_poly();
  else
    t["quartic"] = nullptr;
  return t;
}

}  // namespace

ordered_json tool_header() {
  return ordered_json{{"name", kToolName}, {"version", kToolVersion}};
}

ordered_json unit_document(const FundamentalUnit& u) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "unit";
  doc["p"] = u.p;
  doc["t"] = u.t.get_str();
  doc["b"] = u.b.get_str();
  return doc;
}

ordered_json certificate_document(const CertifyResult& res,
                                  const FieldTower& tower) {
  const Certificate& c = res.cert;
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "certificate";
  doc["tool"] = tool_header();
  doc["passed"] = res.passed;
  doc["failed_check"] =
      res.failed_check.empty() ? ordered_json(nullptr) : ordered_json(res.failed_check);
  doc["p"] = c.p;
  doc["q"] = c.q;
  doc["t"] = c.t.get_str();
  doc["b"] = c.b.get_str();
  doc["m0"] = c.m0;
  doc["n0"] = c.n0;
  doc["Nq"] = c.nq;
  doc["condition_i"] = ordered_json{{"ok", c.condition_i_ok},
                                    {"witness_mod_p2", c.condition_i_witness}};
  if (c.ext_degree != 0) {
    doc["extension_degree"] = c.ext_degree;
    doc["root"] = elem_to_json(c.root);
    ordered_json roots = ordered_json::array();
    for (const FieldElem& r : c.root_set) roots.push_back(elem_to_json(r));
    doc["root_set"] = roots;
  } else {
    doc["extension_degree"] = nullptr;
    doc["root"] = nullptr;
    doc["root_set"] = ordered_json::array();
  }
  doc["pth_power_check"] = c.pth_power_check;
  doc["parity_check"] = c.parity_check;
  doc["tower"] = tower_to_json(tower);
  return doc;
}

ordered_json search_document(const FundamentalUnit& u,
                             const std::vector<SearchHit>& hits) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "search";
  doc["tool"] = tool_header();
  doc["p"] = u.p;
  doc["t"] = u.t.get_str();
  doc["b"] = u.b.get_str();
  ordered_json arr = ordered_json::array();
  for (const SearchHit& h : hits) {
    ordered_json e;
    e["q"] = h.q;
    e["Nq"] = h.nq;
    e["m_modulus"] = h.m_modulus;
    e["n_modulus"] = h.n_modulus;
    e["m0"] = h.m0;
    e["n0"] = h.n0;
    if (h.has_split_witness) {
      e["witness_m"] = h.witness_m;
      e["witness_n"] = h.witness_n;
    } else {
      e["witness_m"] = nullptr;
      e["witness_n"] = nullptr;
    }
    FieldTower tower(h.q);
    e["certificate"] = certificate_document(h.cert, tower);
    arr.push_back(std::move(e));
  }
  doc["hits"] = std::move(arr);
  return doc;
}

namespace {

std::string aligned_rows(const std::vector<std::string>& labels,
                         const std::vector<std::vector<std::uint64_t>>& rows) {
  std::size_t label_w = 0;
  for (const auto& l : labels) label_w = std::max(label_w, l.size());
  std::size_t cell_w = 1;
  for (const auto& row : rows)
    for (std::uint64_t v : row)
      cell_w = std::max(cell_w, std::to_string(v).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << labels[i];
    os << std::string(label_w - labels[i].size(), ' ');
    for (std::uint64_t v : rows[i]) {
      std::string s = std::to_string(v);
      os << " | " << std::string(cell_w - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_tables(const FundamentalUnit& u, std::uint64_t q,
                          const std::vector<SearchHit>& hits) {
  std::vector<SearchHit> sliced = table_slice(u, hits, q);
  std::vector<const SearchHit*> sel;
  for (const SearchHit& h : sliced) sel.push_back(&h);

  std::ostringstream os;
  if (sel.empty()) {
    os << "p=" << u.p << " q=" << q << ": no residue classes found\n";
    return os.str();
  }
  std::uint64_t nq = sel.front()->nq;
  std::uint64_t mm = sel.front()->m_modulus;
  std::uint64_t nm = sel.front()->n_modulus;

  os << "p=" << u.p << " q=" << q << " Nq=" << nq << '\n';
  os << "classes (m0 mod " << mm << ", n0 mod " << nm << "):\n";
  {
    std::vector<std::uint64_t> ms, ns;
    for (const SearchHit* h : sel) {
      ms.push_back(h->m0);
      ns.push_back(h->n0);
    }
    os << aligned_rows({"m0", "n0"}, {ms, ns});
  }
  if (!sel.front()->has_split_witness) {
    os << "(witness tables unavailable: p divides b)\n";
    return os.str();
  }
  std::uint64_t p2 = u.p * u.p;
  {
    std::map<std::uint64_t, std::uint64_t> wm;
    for (const SearchHit* h : sel) wm[h->m0] = h->witness_m;
    std::vector<std::uint64_t> ms, ws;
    for (auto [m0, w] : wm) {
      ms.push_back(m0);
      ws.push_back(w);
    }
    os << "witness 2*F(m0)/L(m0) mod " << p2 << ":\n";
    os << aligned_rows({"m0", "value"}, {ms, ws});
  }
  {
    std::map<std::uint64_t, std::uint64_t> wn;
    for (const SearchHit* h : sel) wn[h->n0] = h->witness_n;
    std::vector<std::uint64_t> ns, ws;
    for (auto [n0, w] : wn) {
      ns.push_back(n0);
      ws.push_back(w);
    }
    os << "witness F(n0) mod " << p2 << ":\n";
    os << aligned_rows({"n0", "value"}, {ns, ws});
  }
  return os.str();
}

}  // namespace cycert::cli
