#include "tvcat/cli/dispatch.hpp"

#include <chrono>
#include <map>
#include <ostream>

#include <nlohmann/json.hpp>

#include "tvcat/cli/table.hpp"
#include "tvcat/completion.hpp"
#include "tvcat/error.hpp"
#include "tvcat/quantale.hpp"

namespace tvcat::cli {

namespace {

using json = nlohmann::ordered_json;

struct Report {
  std::string operation;
  json instance = json::object();
  std::string verdict = "pass";
  json witnesses = json::array();
  json result = json::object();
  json work = json::object();
  std::string text;
  int exit_code = exit_ok;

  void witness(const std::string& law, const std::string& w) { witnesses.push_back({{"law", law}, {"witness", w}}); }
  void counterexample(std::string v) {
    verdict = std::move(v);
    exit_code = exit_counterexample;
  }
};

CompletionCaps completion_caps(const Caps& c) {
  CompletionCaps cc;
  cc.function_cap = c.functions;
  cc.injective_size = c.injective;
  cc.kz_size = c.kz;
  cc.map_cap = c.maps;
  return cc;
}

void require_enumerable(const Workspace& ws, const std::string& name, const TCategory& x) {
  if (x.size() > ws.caps.carrier)
    fail(ErrorKind::cap_exceeded, "category " + name + " has " + std::to_string(x.size()) +
                                      " points, above the carrier cap " + std::to_string(ws.caps.carrier));
  const Quantale& q = x.quantale();
  if (q.is_finite() && q.size() > ws.caps.quantale)
    fail(ErrorKind::cap_exceeded, "|V| = " + std::to_string(q.size()) + " is above the quantale cap " +
                                      std::to_string(ws.caps.quantale));
}

std::string order_header(const Quantale& q) { return q.is_finite() ? "" : "order: op\n"; }

std::vector<std::string> row_labels(const TCategory& x) { return x.theory().monad().labels(x.carrier().elements); }

std::string matrix_table(const VMatrix& m, const std::vector<std::string>& rows, const std::vector<std::string>& cols) {
  std::vector<std::string> hdr{""};
  hdr.insert(hdr.end(), cols.begin(), cols.end());
  Table t(hdr);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row{rows[r]};
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.quantale().format(m(r, c)));
    t.add(std::move(row));
  }
  return t.render();
}

std::string category_table(const TCategory& x) {
  return order_header(x.quantale()) + matrix_table(x.structure(), row_labels(x), x.carrier().elements);
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

json category_json(const TCategory& x) {
  return {{"carrier", x.carrier().elements}, {"rows", row_labels(x)}, {"structure", matrix_json(x.structure())}};
}

std::string map_table(const TFunctor& f, const std::string& from, const std::string& to) {
  Table t({from, to});
  for (std::size_t i = 0; i < f.map.size(); ++i) t.add({f.dom->carrier().elements[i], f.cod->carrier().elements[f.map[i]]});
  return t.render();
}

json map_json(const TFunctor& f) {
  json m = json::object();
  for (std::size_t i = 0; i < f.map.size(); ++i) m[f.dom->carrier().elements[i]] = f.cod->carrier().elements[f.map[i]];
  return m;
}

void audit_into(Report& rep, const AuditReport& r) {
  Table t({"law", "status", "witness"});
  json entries = json::array();
  for (const auto& e : r.entries) {
    std::string w = e.witness.empty() ? e.note : e.witness;
    t.add({e.law, std::string(to_string(e.status)), w});
    json j = {{"law", e.law}, {"status", std::string(to_string(e.status))}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(std::move(j));
    if (e.status == Status::fail) rep.witness(e.law, e.witness);
  }
  rep.text += r.subject + "\n" + t.render();
  rep.result["subject"] = r.subject;
  rep.result["sampled"] = r.sampled;
  rep.result["entries"] = std::move(entries);
  rep.work["laws"] = r.entries.size();
  if (!r.passed()) rep.counterexample("fail");
}

std::string presheaf_label(const PresheafCategory& p, std::size_t i) { return p.category->carrier().elements[i]; }

std::size_t expect_args(const Command& cmd, std::size_t n) {
  if (cmd.args.size() != n)
    fail(ErrorKind::parse, cmd.verb + " expects " + std::to_string(n) + " object name" + (n == 1 ? "" : "s") + ", got " +
                               std::to_string(cmd.args.size()));
  return n;
}

void cmd_check(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 0);
  Table t({"kind", "name", "summary"});
  json objs = json::array();
  auto add = [&](const std::string& kind, const std::string& name, const std::string& summary) {
    t.add({kind, name, summary});
    objs.push_back({{"kind", kind}, {"name", name}, {"summary", summary}});
  };
  add("quantale", ws.quantale->name(), ws.quantale->is_finite() ? std::to_string(ws.quantale->size()) + " elements" : "infinite");
  add("theory", ws.theory->name(), ws.audited_on_load ? "certified by audit at load" :
                                    ws.theory->certified() ? "built-in certified" : "unaudited");
  for (const auto& [n, c] : ws.categories)
    add("category", n, std::to_string(c->size()) + (c->size() == 1 ? " point" : " points") + (separated(*c) ? ", separated" : ""));
  for (const auto& [n, f] : ws.functors)
    add("functor", n, ws.name_of(f.dom) + " -> " + ws.name_of(f.cod));
  for (const auto& [n, d] : ws.distributors)
    add("distributor", n, ws.name_of(d.dom) + " -o-> " + ws.name_of(d.cod));
  for (const auto& [n, r] : ws.relations) add("relation", n, std::to_string(r.pairs.size()) + " pairs on " + r.on);
  for (const auto& [n, c] : ws.classes) add("class", n, c.name());
  rep.text += t.render();
  rep.work["objects"] = objs.size();
  rep.result["objects"] = std::move(objs);
}

void cmd_audit_quantale(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 0);
  audit_into(rep, audit_quantale(*ws.quantale));
}

void cmd_audit_theory(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 0);
  const std::size_t cap = cmd.cap.value_or(ws.caps.theory);
  rep.instance["cap"] = cap;
  audit_into(rep, audit_theory(*ws.theory, cap));
}

void cmd_audit_phi(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 0);
  const PhiClass phi = ws.phi(cmd.phi);
  PhiUniverse u{ws.theory, cmd.cap.value_or(ws.caps.audit)};
  rep.instance["universe"] = u.max_size;
  audit_into(rep, audit_axioms(phi, u));
}

void describe_presheaves(const PresheafCategory& p, Report& rep) {
  const TCategory& x = *p.base;
  const auto rows = row_labels(x);
  std::vector<std::string> hdr{"#", "presheaf"};
  hdr.insert(hdr.end(), rows.begin(), rows.end());
  Table t(hdr);
  json els = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<std::string> r{std::to_string(i), presheaf_label(p, i)};
    json w = json::object();
    for (std::size_t u = 0; u < rows.size(); ++u) {
      r.push_back(x.quantale().format(p.elements[i][u]));
      w[rows[u]] = x.quantale().format(p.elements[i][u]);
    }
    t.add(std::move(r));
    els.push_back({{"label", presheaf_label(p, i)}, {"weight", std::move(w)}});
  }
  rep.text += p.category->carrier().name + ": " + std::to_string(p.size()) + " presheaves\n" + t.render() + "\nstructure\n" +
              category_table(*p.category);
  rep.result["presheaves"] = std::move(els);
  rep.result["category"] = category_json(*p.category);
  rep.work["presheaves"] = p.size();
}

void cmd_presheaf(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 1);
  CategoryRef x = ws.category(cmd.args[0]);
  require_enumerable(ws, cmd.args[0], *x);
  describe_presheaves(presheaf_cat(x, ws.phi(cmd.phi), completion_caps(ws.caps)), rep);
  rep.verdict = "constructed";
}

void cmd_yoneda(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 1);
  CategoryRef x = ws.category(cmd.args[0]);
  require_enumerable(ws, cmd.args[0], *x);
  Embedding e = yoneda_phi(x, ws.phi(cmd.phi), completion_caps(ws.caps));
  const bool ff = fully_faithful(e.y);
  rep.text += map_table(e.y, "x", "y(x)") + "fully faithful: " + (ff ? "yes" : "no") + "\n";
  rep.result["map"] = map_json(e.y);
  rep.result["fully_faithful"] = ff;
  rep.work["presheaves"] = e.presheaves.size();
  rep.verdict = "constructed";
  if (!ff) {
    rep.witness("fully faithful", "y is not fully faithful");
    rep.counterexample("fail");
  }
}

void cmd_complete(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 1);
  CategoryRef x = ws.category(cmd.args[0]);
  require_enumerable(ws, cmd.args[0], *x);
  const PresheafCategory p = presheaf_cat(x, ws.phi(cmd.phi), completion_caps(ws.caps));
  const TFunctor y = yoneda_map(p);
  const SupResult s = sup_phi(p, y);
  rep.work["presheaves"] = p.size();
  rep.result["left_inverse"] = s.left_inverse.has_value();
  if (s.left_adjoint) {
    rep.text += "Sup: " + p.category->carrier().name + " -> " + cmd.args[0] + " (left adjoint of y)\n" +
                map_table(*s.left_adjoint, "psi", "Sup psi");
    rep.result["sup"] = map_json(*s.left_adjoint);
    rep.verdict = "constructed";
    return;
  }
  rep.text += "Sup: absent\n";
  if (s.certificate) {
    const std::string w = "psi = " + presheaf_label(p, *s.certificate) + " has no colimit";
    rep.text += "certificate: " + w + "\n";
    rep.result["certificate"] = presheaf_label(p, *s.certificate);
    rep.witness("Sup exists", w);
  }
  rep.counterexample("absent");
}

void cmd_colim(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 0);
  if (cmd.weight.empty() || cmd.along.empty()) fail(ErrorKind::parse, "colim needs --weight D and --along F");
  const Distributor& d = ws.distributor(cmd.weight);
  const TFunctor& h = ws.functor(cmd.along);
  rep.instance["weight"] = cmd.weight;
  rep.instance["along"] = cmd.along;
  auto g = colimit(d, h);
  if (g) {
    rep.text += "colim(" + cmd.weight + ", " + cmd.along + "): " + ws.name_of(d.cod) + " -> " + ws.name_of(h.cod) + "\n" +
                map_table(*g, "z", "g(z)");
    rep.result["colimit"] = map_json(*g);
    rep.verdict = "constructed";
    return;
  }
  const std::string w = "no T-functor g with g_* = " + cmd.along + "_* ⟜ " + cmd.weight;
  rep.text += "colimit: absent\n" + w + "\n";
  rep.witness("colimit exists", w);
  rep.counterexample("absent");
}

void cmd_cocomplete(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 1);
  CategoryRef x = ws.category(cmd.args[0]);
  require_enumerable(ws, cmd.args[0], *x);
  const PhiClass phi = ws.phi(cmd.phi);
  const CompletionCaps cc = completion_caps(ws.caps);
  const InjectivityTests tests = injectivity_tests(ws.theory, phi, cc.injective_size);
  const CocompleteVerdict v = cocomplete_check(x, phi, cc, &tests);
  const PresheafCategory& p = v.presheaves;
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  Table t({"condition", "holds"});
  t.add({"(i) injective, |B| <= " + std::to_string(cc.injective_size), yes(v.injective)});
  t.add({"(ii) y has a left inverse", yes(v.left_inverse)});
  t.add({"(iii) y has a left adjoint", yes(v.left_adjoint)});
  t.add({"(iv) cocomplete", yes(v.cocomplete)});
  rep.text += t.render();
  rep.result["flags"] = {{"injective", v.injective},
                         {"left_inverse", v.left_inverse},
                         {"left_adjoint", v.left_adjoint},
                         {"cocomplete", v.cocomplete}};
  rep.work["presheaves"] = p.size();
  rep.work["inclusions"] = tests.inclusions.size();
  if (v.sup) {
    rep.text += "\nSup\n" + map_table(*v.sup, "psi", "Sup psi");
    rep.result["sup"] = map_json(*v.sup);
  }
  if (v.certificate) {
    const std::string w = "psi = " + presheaf_label(p, *v.certificate) + " has no colimit";
    rep.text += "\ncertificate: " + w + "\n";
    rep.result["certificate"] = presheaf_label(p, *v.certificate);
    rep.witness("(iv) cocomplete", w);
  }
  if (v.injectivity_witness) {
    rep.text += "injectivity counterexample: " + *v.injectivity_witness + "\n";
    rep.witness("(i) injective", *v.injectivity_witness);
  }
  if (!v.agree()) {
    rep.text += "THEOREM VIOLATION: the four conditions disagree\n";
    rep.witness("four conditions agree", "injective=" + yes(v.injective) + " left_inverse=" + yes(v.left_inverse) +
                                             " left_adjoint=" + yes(v.left_adjoint) + " cocomplete=" + yes(v.cocomplete));
    rep.counterexample("violation");
  } else if (!v.cocomplete) {
    rep.counterexample("fail");
  }
}

void cmd_injective(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 1);
  CategoryRef x = ws.category(cmd.args[0]);
  require_enumerable(ws, cmd.args[0], *x);
  const std::size_t cap = cmd.cap.value_or(ws.caps.injective);
  rep.instance["cap"] = cap;
  const InjectivityTests tests = injectivity_tests(ws.theory, ws.phi(cmd.phi), cap);
  auto w = injectivity_counterexample(x, tests, completion_caps(ws.caps));
  rep.work["inclusions"] = tests.inclusions.size();
  rep.result["injective"] = !w.has_value();
  if (!w) {
    rep.text += "no counterexample with |B| <= " + std::to_string(cap) + " (" + std::to_string(tests.inclusions.size()) +
                " dense inclusions)\n";
    return;
  }
  rep.text += "counterexample: " + *w + "\n";
  rep.witness("injective", *w);
  rep.counterexample("fail");
}

void cmd_kz(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 1);
  CategoryRef x = ws.category(cmd.args[0]);
  require_enumerable(ws, cmd.args[0], *x);
  audit_into(rep, kz_audit(x, ws.phi(cmd.phi), completion_caps(ws.caps)));
}

void cmd_split_fork(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 2);
  const Relation& r = ws.relation(cmd.args[0]);
  if (r.on != cmd.args[1])
    fail(ErrorKind::mismatch, "relation " + cmd.args[0] + " is on " + r.on + ", not " + cmd.args[1]);
  CategoryRef x = ws.category(cmd.args[1]);
  require_enumerable(ws, cmd.args[1], *x);
  CategoryRef prod = cartesian_product(*x, *x);
  std::vector<std::size_t> points;
  for (auto [a, b] : r.pairs) points.push_back(a * x->size() + b);
  const Subcategory sub = full_subcategory(prod, points);
  const TFunctor p1 = compose(projection(prod, x, x, 1), sub.inclusion);
  const TFunctor p2 = compose(projection(prod, x, x, 2), sub.inclusion);
  audit_into(rep, split_fork_audit(p1, p2, ws.phi(cmd.phi), completion_caps(ws.caps)));
}

void cmd_kan(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 2);
  CategoryRef x = ws.category(cmd.args[0]);
  CategoryRef y = ws.category(cmd.args[1]);
  require_enumerable(ws, cmd.args[0], *x);
  require_enumerable(ws, cmd.args[1], *y);
  audit_into(rep, kan_check(x, y, ws.phi(cmd.phi), completion_caps(ws.caps)));
}

void cmd_dual(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 1);
  CategoryRef d = dual_op(*ws.category(cmd.args[0]));
  rep.text += category_table(*d);
  rep.result["category"] = category_json(*d);
  rep.verdict = "constructed";
}

void cmd_tensor(const Command& cmd, const Workspace& ws, Report& rep) {
  expect_args(cmd, 2);
  CategoryRef t = tensor_product(*ws.category(cmd.args[0]), *ws.category(cmd.args[1]));
  rep.text += category_table(*t);
  rep.result["category"] = category_json(*t);
  rep.verdict = "constructed";
}

using Handler = void (*)(const Command&, const Workspace&, Report&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"check", cmd_check},           {"audit-quantale", cmd_audit_quantale}, {"audit-theory", cmd_audit_theory},
      {"audit-phi", cmd_audit_phi},   {"presheaf", cmd_presheaf},             {"yoneda", cmd_yoneda},
      {"complete", cmd_complete},     {"colim", cmd_colim},                   {"cocomplete", cmd_cocomplete},
      {"injective", cmd_injective},   {"kz-audit", cmd_kz},                   {"split-fork", cmd_split_fork},
      {"kan-check", cmd_kan},         {"dual", cmd_dual},                     {"tensor", cmd_tensor},
  };
  return h;
}

bool uses_class(const std::string& verb) {
  return verb == "audit-phi" || verb == "presheaf" || verb == "yoneda" || verb == "complete" || verb == "cocomplete" ||
         verb == "injective" || verb == "kz-audit" || verb == "split-fork" || verb == "kan-check";
}

json caps_json(const Caps& c) {
  json j = json::object();
  for (const auto& [k, v] : c.items()) j[k] = v;
  return j;
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = {"check",      "audit-quantale", "audit-theory", "audit-phi", "presheaf",
                                             "yoneda",     "complete",       "colim",        "cocomplete", "injective",
                                             "kz-audit",   "split-fork",     "kan-check",    "dual",       "tensor"};
  return v;
}

Outcome dispatch(const Command& cmd, const Workspace& ws, const OutputOptions& out) {
  auto it = handlers().find(cmd.verb);
  if (it == handlers().end()) fail(ErrorKind::unknown_name, "unknown command '" + cmd.verb + "'");
  Report rep;
  rep.operation = cmd.verb;
  rep.instance["workspace"] = ws.name;
  rep.instance["quantale"] = ws.quantale->name();
  rep.instance["theory"] = ws.theory->name();
  rep.instance["objects"] = cmd.args;
  if (uses_class(cmd.verb)) rep.instance["class"] = ws.phi(cmd.phi).name();

  const auto t0 = std::chrono::steady_clock::now();
  it->second(cmd, ws, rep);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  json timing = {{"work", rep.work}};
  if (out.timing) timing["wall_ms"] = ms;

  Outcome o;
  o.exit_code = rep.exit_code;
  if (out.json) {
    json doc;
    doc["schema"] = "tvcat-report/1";
    doc["instance"] = rep.instance;
    doc["operation"] = rep.operation;
    doc["verdict"] = rep.verdict;
    doc["witnesses"] = rep.witnesses;
    doc["result"] = rep.result;
    doc["caps"] = caps_json(ws.caps);
    doc["timing"] = timing;
    o.output = doc.dump(2) + "\n";
    return o;
  }
  std::string head = cmd.verb;
  for (const auto& a : cmd.args) head += " " + a;
  if (uses_class(cmd.verb)) head += "  [class " + ws.phi(cmd.phi).name() + "]";
  head += "  (" + ws.quantale->name() + ", " + ws.theory->name() + ")\n\n";
  o.output = head + rep.text + "\nverdict: " + rep.verdict + "\n";
  if (out.timing) o.output += "wall: " + std::to_string(static_cast<long long>(ms)) + " ms\n";
  return o;
}

std::string error_output(const std::string& verb, const std::string& kind, const std::string& message,
                         const OutputOptions& out) {
  if (!out.json) return "error (" + kind + "): " + message + "\n";
  json doc;
  doc["schema"] = "tvcat-report/1";
  doc["instance"] = json::object();
  doc["operation"] = verb;
  doc["verdict"] = "error";
  doc["witnesses"] = json::array();
  doc["error"] = {{"kind", kind}, {"message", message}};
  return doc.dump(2) + "\n";
}

}  // namespace tvcat::cli
