#include "tvcat/cli/workspace.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tvcat/error.hpp"
#include "tvcat/quantale.hpp"

namespace tvcat::cli {

using json = nlohmann::ordered_json;

namespace {

std::size_t parse_size(std::string_view text, const std::string& what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size())
    fail(ErrorKind::parse, what + ": '" + std::string(text) + "' is not a nonnegative integer");
  return v;
}

std::size_t* cap_field(Caps& c, std::string_view key) {
  if (key == "carrier") return &c.carrier;
  if (key == "quantale") return &c.quantale;
  if (key == "injective") return &c.injective;
  if (key == "kz") return &c.kz;
  if (key == "functions") return &c.functions;
  if (key == "maps") return &c.maps;
  if (key == "audit") return &c.audit;
  if (key == "theory") return &c.theory;
  return nullptr;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(ErrorKind::parse, where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(ErrorKind::parse, where + ": expected a string");
  return j.get<std::string>();
}

Value parse_value(const Quantale& q, const json& j, const std::string& where) {
  std::string text;
  if (j.is_string())
    text = j.get<std::string>();
  else if (j.is_number_unsigned() || j.is_number_integer())
    text = j.dump();
  else if (j.is_number_float())
    text = j.dump();
  else if (j.is_boolean())
    text = j.get<bool>() ? "top" : "bot";
  else
    fail(ErrorKind::parse, where + ": expected a quantale element");
  try {
    return q.parse(text);
  } catch (const Error& e) {
    fail(ErrorKind::parse, where + ": " + e.what());
  }
}

std::size_t label_index(const FinSet& s, const json& j, const std::string& where) {
  const std::string label = j.is_string() ? j.get<std::string>() : j.dump();
  auto i = s.index_of(label);
  if (!i) fail(ErrorKind::unknown_name, where + ": '" + label + "' is not an element of " + s.name);
  return *i;
}

// Rows of a matrix indexed by `rows` x `cols`, given either as an array in
// index order or as an object keyed by labels (rows) with array or object rows.
VMatrix parse_matrix(const QuantaleRef& q, const json& j, const std::vector<std::string>& rows,
                     const FinSet& cols, const std::string& where) {
  VMatrix m(q, rows.size(), cols.size());
  auto parse_row = [&](std::size_t r, const json& row, const std::string& rw) {
    if (row.is_array()) {
      if (row.size() != cols.size())
        fail(ErrorKind::parse, rw + ": expected " + std::to_string(cols.size()) + " entries, got " +
                                   std::to_string(row.size()));
      for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = parse_value(*q, row[c], rw + "[" + std::to_string(c) + "]");
    } else if (row.is_object()) {
      if (row.size() != cols.size()) fail(ErrorKind::parse, rw + ": every column must be given");
      for (auto& [k, v] : row.items()) {
        auto c = cols.index_of(k);
        if (!c) fail(ErrorKind::unknown_name, rw + ": unknown column '" + k + "'");
        m(r, *c) = parse_value(*q, v, rw + "[" + k + "]");
      }
    } else {
      fail(ErrorKind::parse, rw + ": expected a row");
    }
  };
  if (j.is_array()) {
    if (j.size() != rows.size())
      fail(ErrorKind::parse, where + ": expected " + std::to_string(rows.size()) + " rows, got " + std::to_string(j.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) parse_row(r, j[r], where + "[" + std::to_string(r) + "]");
  } else if (j.is_object()) {
    if (j.size() != rows.size()) fail(ErrorKind::parse, where + ": every row must be given");
    for (auto& [k, v] : j.items()) {
      auto it = std::find(rows.begin(), rows.end(), k);
      if (it == rows.end()) fail(ErrorKind::unknown_name, where + ": unknown row '" + k + "'");
      parse_row(static_cast<std::size_t>(it - rows.begin()), v, where + "[" + k + "]");
    }
  } else {
    fail(ErrorKind::parse, where + ": expected a matrix");
  }
  return m;
}

json matrix_json(const VMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.quantale().format(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QuantaleRef parse_quantale(const json& j, bool allow_unaudited) {
  if (j.is_string()) return builtin_quantale(j.get<std::string>());
  const std::string where = "quantale";
  const std::string name = as_string(field(j, "name", where), where + ".name");
  const json& lj = field(j, "labels", where);
  if (!lj.is_array()) fail(ErrorKind::parse, where + ".labels: expected an array");
  std::vector<std::string> labels;
  for (auto& l : lj) labels.push_back(as_string(l, where + ".labels"));
  const std::size_t n = labels.size();
  FinSet lset = FinSet::of(name, labels);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<std::size_t>> tensor(n, std::vector<std::size_t>(n));
  const json& lq = field(j, "leq", where);
  const json& tj = field(j, "tensor", where);
  if (!lq.is_array() || lq.size() != n || !tj.is_array() || tj.size() != n)
    fail(ErrorKind::parse, where + ": leq and tensor must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!lq[i].is_array() || lq[i].size() != n || !tj[i].is_array() || tj[i].size() != n)
      fail(ErrorKind::parse, where + ": row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      if (!lq[i][k].is_boolean()) fail(ErrorKind::parse, where + ".leq: expected booleans");
      leq[i][k] = lq[i][k].get<bool>();
      tensor[i][k] = label_index(lset, tj[i][k], where + ".tensor");
    }
  }
  const std::size_t unit = label_index(lset, field(j, "unit", where), where + ".unit");
  auto q = std::make_shared<const Quantale>(Quantale::finite_table(name, labels, leq, tensor, unit));
  if (!allow_unaudited) {
    const AuditReport r = audit_quantale(*q);
    for (const auto& e : r.entries)
      if (e.status == Status::fail)
        fail(ErrorKind::validation, "quantale " + name + " fails '" + e.law + "': " + e.witness +
                                        " (pass --allow-unaudited to load it anyway)");
  }
  return q;
}

json quantale_json(const Quantale& q) {
  try {
    if (*builtin_quantale(q.name()) == q) return q.name();
  } catch (const Error&) {
  }
  json j;
  j["name"] = q.name();
  j["labels"] = q.labels();
  const auto el = q.elements();
  json leq = json::array(), tensor = json::array();
  for (const auto& u : el) {
    json lr = json::array(), tr = json::array();
    for (const auto& v : el) {
      lr.push_back(q.leq(u, v));
      tr.push_back(q.format(q.tensor(u, v)));
    }
    leq.push_back(std::move(lr));
    tensor.push_back(std::move(tr));
  }
  j["leq"] = std::move(leq);
  j["tensor"] = std::move(tensor);
  j["unit"] = q.format(q.unit());
  return j;
}

}  // namespace

void Caps::apply(std::string_view overrides) {
  std::size_t pos = 0;
  while (pos < overrides.size()) {
    std::size_t end = overrides.find(',', pos);
    if (end == std::string_view::npos) end = overrides.size();
    std::string_view item = overrides.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) fail(ErrorKind::parse, "caps: expected key=value, got '" + std::string(item) + "'");
    std::size_t* f = cap_field(*this, item.substr(0, eq));
    if (f == nullptr) fail(ErrorKind::unknown_name, "caps: unknown cap '" + std::string(item.substr(0, eq)) + "'");
    *f = parse_size(item.substr(eq + 1), "caps." + std::string(item.substr(0, eq)));
  }
}

std::vector<std::pair<std::string, std::size_t>> Caps::items() const {
  return {{"carrier", carrier}, {"quantale", quantale}, {"injective", injective}, {"kz", kz},
          {"functions", functions}, {"maps", maps}, {"audit", audit}, {"theory", theory}};
}

Caps default_caps() {
  Caps c;
  if (const char* env = std::getenv("TVCAT_DEFAULT_CAPS")) c.apply(env);
  return c;
}

CategoryRef Workspace::category(const std::string& n) const {
  auto it = categories.find(n);
  if (it == categories.end()) fail(ErrorKind::unknown_name, "no category named '" + n + "'");
  return it->second;
}

const TFunctor& Workspace::functor(const std::string& n) const {
  auto it = functors.find(n);
  if (it == functors.end()) fail(ErrorKind::unknown_name, "no functor named '" + n + "'");
  return it->second;
}

const Distributor& Workspace::distributor(const std::string& n) const {
  auto it = distributors.find(n);
  if (it == distributors.end()) fail(ErrorKind::unknown_name, "no distributor named '" + n + "'");
  return it->second;
}

const Relation& Workspace::relation(const std::string& n) const {
  auto it = relations.find(n);
  if (it == relations.end()) fail(ErrorKind::unknown_name, "no relation named '" + n + "'");
  return it->second;
}

PhiClass Workspace::phi(const std::string& n) const {
  if (auto it = classes.find(n); it != classes.end()) return it->second;
  return builtin_class(n);
}

std::string Workspace::name_of(const CategoryRef& c) const {
  for (const auto& [n, x] : categories)
    if (x == c) return n;
  return c->carrier().name;
}

Workspace parse_workspace_text(std::string_view text, const std::string& origin, const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, origin + ": " + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::parse, origin + ": the document must be an object");
  static const std::vector<std::string> known = {"name",   "quantale",  "theory",  "categories",
                                                 "functors", "distributors", "relations", "classes", "caps"};
  for (auto& [k, v] : doc.items())
    if (std::find(known.begin(), known.end(), k) == known.end())
      fail(ErrorKind::parse, origin + ": unknown section '" + k + "'");

  Workspace ws;
  ws.name = doc.contains("name") ? as_string(doc["name"], "name") : std::filesystem::path(origin).stem().string();
  ws.caps = options.caps;
  if (doc.contains("caps")) {
    const json& c = doc["caps"];
    if (!c.is_object()) fail(ErrorKind::parse, "caps: expected an object");
    for (auto& [k, v] : c.items()) {
      std::size_t* f = cap_field(ws.caps, k);
      if (f == nullptr) fail(ErrorKind::unknown_name, "caps: unknown cap '" + k + "'");
      if (!v.is_number_unsigned()) fail(ErrorKind::parse, "caps." + k + ": expected a nonnegative integer");
      *f = v.get<std::size_t>();
    }
  }

  ws.quantale = parse_quantale(field(doc, "quantale", origin), options.allow_unaudited);
  const json& tj = field(doc, "theory", origin);
  ws.monad = tj.is_string() ? tj.get<std::string>() : as_string(field(tj, "monad", "theory"), "theory.monad");
  ws.theory = builtin_theory(ws.monad, ws.quantale);
  if (!ws.theory->certified()) {
    if (!options.allow_unaudited) {
      Certification c = certify_theory(*ws.theory, ws.caps.theory);
      if (!c.theory) {
        std::string law;
        for (const auto& e : c.report.entries)
          if (e.status == Status::fail) {
            law = e.law + ": " + e.witness;
            break;
          }
        fail(ErrorKind::validation, "theory " + ws.theory->name() + " fails its audit (" + law +
                                        "); pass --allow-unaudited to load it anyway");
      }
      ws.theory = c.theory;
      ws.audited_on_load = true;
    }
  }

  if (doc.contains("categories")) {
    for (auto& [n, cj] : doc["categories"].items()) {
      const std::string where = "category " + n;
      const json& carrier = field(cj, "carrier", where);
      if (!carrier.is_array()) fail(ErrorKind::parse, where + ".carrier: expected an array");
      std::vector<std::string> labels;
      for (auto& l : carrier) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
      FinSet s = FinSet::of(n, labels);
      const auto rows = ws.theory->monad().labels(s.elements);
      VMatrix a = parse_matrix(ws.quantale, field(cj, "structure", where), rows, s, where + ".structure");
      auto checked = check_category(ws.theory, s, std::move(a));
      if (!checked) fail(ErrorKind::validation, where + ": " + checked.violation().describe());
      ws.categories[n] = checked.value();
    }
  }
  if (doc.contains("functors")) {
    for (auto& [n, fj] : doc["functors"].items()) {
      const std::string where = "functor " + n;
      CategoryRef x = ws.category(as_string(field(fj, "dom", where), where + ".dom"));
      CategoryRef y = ws.category(as_string(field(fj, "cod", where), where + ".cod"));
      const json& mj = field(fj, "map", where);
      Map m(x->size(), 0);
      if (mj.is_object()) {
        if (mj.size() != x->size()) fail(ErrorKind::parse, where + ".map: every point of the domain must be mapped");
        for (auto& [k, v] : mj.items()) {
          auto i = x->carrier().index_of(k);
          if (!i) fail(ErrorKind::unknown_name, where + ".map: '" + k + "' is not a point of " + x->carrier().name);
          m[*i] = label_index(y->carrier(), v, where + ".map[" + k + "]");
        }
      } else if (mj.is_array() && mj.size() == x->size()) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = label_index(y->carrier(), mj[i], where + ".map");
      } else {
        fail(ErrorKind::parse, where + ".map: expected a label table");
      }
      auto checked = check_functor(std::move(m), x, y);
      if (!checked) fail(ErrorKind::validation, where + ": " + checked.violation().describe());
      ws.functors.emplace(n, checked.value());
    }
  }
  if (doc.contains("distributors")) {
    for (auto& [n, dj] : doc["distributors"].items()) {
      const std::string where = "distributor " + n;
      CategoryRef x = ws.category(as_string(field(dj, "dom", where), where + ".dom"));
      CategoryRef y = ws.category(as_string(field(dj, "cod", where), where + ".cod"));
      const auto rows = ws.theory->monad().labels(x->carrier().elements);
      VMatrix m = parse_matrix(ws.quantale, field(dj, "matrix", where), rows, y->carrier(), where + ".matrix");
      auto checked = check_distributor(std::move(m), x, y);
      if (!checked) fail(ErrorKind::validation, where + ": " + checked.violation().describe());
      ws.distributors.emplace(n, checked.value());
    }
  }
  if (doc.contains("relations")) {
    for (auto& [n, rj] : doc["relations"].items()) {
      const std::string where = "relation " + n;
      Relation r;
      r.on = as_string(field(rj, "on", where), where + ".on");
      CategoryRef x = ws.category(r.on);
      const json& pj = field(rj, "pairs", where);
      if (!pj.is_array()) fail(ErrorKind::parse, where + ".pairs: expected an array of pairs");
      for (auto& p : pj) {
        if (!p.is_array() || p.size() != 2) fail(ErrorKind::parse, where + ".pairs: expected [a, b]");
        r.pairs.emplace_back(label_index(x->carrier(), p[0], where), label_index(x->carrier(), p[1], where));
      }
      std::sort(r.pairs.begin(), r.pairs.end());
      r.pairs.erase(std::unique(r.pairs.begin(), r.pairs.end()), r.pairs.end());
      ws.relations.emplace(n, std::move(r));
    }
  }
  if (doc.contains("classes")) {
    for (auto& [n, cj] : doc["classes"].items()) {
      const std::string c = cj.is_string() ? cj.get<std::string>() : as_string(field(cj, "class", "class " + n), "class " + n);
      ws.classes.emplace(n, builtin_class(c));
    }
  }
  return ws;
}

Workspace parse_workspace(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_workspace_text(ss.str(), path, options);
}

std::string serialize_workspace(const Workspace& ws) {
  json doc;
  doc["name"] = ws.name;
  doc["quantale"] = quantale_json(*ws.quantale);
  doc["theory"] = {{"monad", ws.monad}};
  json cats = json::object();
  for (const auto& [n, c] : ws.categories) {
    json labels = c->carrier().elements;
    cats[n] = {{"carrier", labels}, {"structure", matrix_json(c->structure())}};
  }
  doc["categories"] = std::move(cats);
  json fs = json::object();
  for (const auto& [n, f] : ws.functors) {
    json m = json::object();
    for (std::size_t i = 0; i < f.map.size(); ++i) m[f.dom->carrier().elements[i]] = f.cod->carrier().elements[f.map[i]];
    fs[n] = {{"dom", ws.name_of(f.dom)}, {"cod", ws.name_of(f.cod)}, {"map", std::move(m)}};
  }
  doc["functors"] = std::move(fs);
  json ds = json::object();
  for (const auto& [n, d] : ws.distributors)
    ds[n] = {{"dom", ws.name_of(d.dom)}, {"cod", ws.name_of(d.cod)}, {"matrix", matrix_json(d.matrix)}};
  doc["distributors"] = std::move(ds);
  json rs = json::object();
  for (const auto& [n, r] : ws.relations) {
    const auto& el = ws.category(r.on)->carrier().elements;
    json pairs = json::array();
    for (auto [a, b] : r.pairs) pairs.push_back({el[a], el[b]});
    rs[n] = {{"on", r.on}, {"pairs", std::move(pairs)}};
  }
  doc["relations"] = std::move(rs);
  json cs = json::object();
  for (const auto& [n, c] : ws.classes) cs[n] = c.name();
  doc["classes"] = std::move(cs);
  json caps = json::object();
  for (const auto& [k, v] : ws.caps.items()) caps[k] = v;
  doc["caps"] = std::move(caps);
  return doc.dump(2) + "\n";
}

bool same_workspace(const Workspace& a, const Workspace& b) {
  if (a.name != b.name || a.monad != b.monad || !(*a.quantale == *b.quantale) || !(a.caps == b.caps)) return false;
  if (a.categories.size() != b.categories.size() || a.functors.size() != b.functors.size() ||
      a.distributors.size() != b.distributors.size() || a.relations != b.relations || a.classes != b.classes)
    return false;
  for (const auto& [n, c] : a.categories) {
    auto it = b.categories.find(n);
    if (it == b.categories.end() || !(*c == *it->second)) return false;
  }
  for (const auto& [n, f] : a.functors) {
    auto it = b.functors.find(n);
    if (it == b.functors.end() || f.map != it->second.map || a.name_of(f.dom) != b.name_of(it->second.dom) ||
        a.name_of(f.cod) != b.name_of(it->second.cod))
      return false;
  }
  for (const auto& [n, d] : a.distributors) {
    auto it = b.distributors.find(n);
    if (it == b.distributors.end() || !(d.matrix == it->second.matrix) || a.name_of(d.dom) != b.name_of(it->second.dom) ||
        a.name_of(d.cod) != b.name_of(it->second.cod))
      return false;
  }
  return true;
}

}  // namespace tvcat::cli
