#include "tvcat/quantale.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "tvcat/error.hpp"

namespace tvcat {

namespace {

using Table = std::vector<std::uint16_t>;

std::string fmt3(const Quantale& q, const char* a, const Value& u, const char* b, const Value& v,
                 const char* c = nullptr, const Value* w = nullptr) {
  std::string s = std::string(a) + "=" + q.format(u) + ", " + b + "=" + q.format(v);
  if (c != nullptr && w != nullptr) s += std::string(", ") + c + "=" + q.format(*w);
  return s;
}

bool parse_int(std::string_view text, std::int64_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

Quantale Quantale::finite_table(std::string name, std::vector<std::string> labels,
                                const std::vector<std::vector<bool>>& leq,
                                const std::vector<std::vector<std::size_t>>& tensor,
                                std::size_t unit) {
  const std::size_t n = labels.size();
  if (n == 0) fail(ErrorKind::validation, "quantale " + name + ": empty carrier");
  if (n > 64) fail(ErrorKind::cap_exceeded, "quantale " + name + ": carrier larger than 64");
  if (leq.size() != n || tensor.size() != n)
    fail(ErrorKind::mismatch, "quantale " + name + ": table dimensions do not match the carrier");
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n || tensor[i].size() != n)
      fail(ErrorKind::mismatch, "quantale " + name + ": table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (tensor[i][j] >= n)
        fail(ErrorKind::mismatch, "quantale " + name + ": tensor entry out of range");
  }
  if (unit >= n) fail(ErrorKind::mismatch, "quantale " + name + ": unit out of range");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) fail(ErrorKind::validation, "quantale " + name + ": duplicate label " + labels[i]);

  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) fail(ErrorKind::validation, "quantale " + name + ": order not reflexive at " + labels[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        fail(ErrorKind::validation, "quantale " + name + ": order not antisymmetric at " + labels[i] + ", " + labels[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          fail(ErrorKind::validation, "quantale " + name + ": order not transitive at " + labels[i] + ", " +
                                          labels[j] + ", " + labels[k]);
    }
  }

  Quantale q;
  q.kind_ = Kind::finite;
  q.name_ = std::move(name);
  q.n_ = n;
  q.labels_ = std::move(labels);
  q.leq_.assign(n * n, 0);
  q.tensor_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      q.leq_[i * n + j] = leq[i][j] ? 1 : 0;
      q.tensor_[i * n + j] = static_cast<std::uint16_t>(tensor[i][j]);
    }

  // least upper / greatest lower bounds of every pair
  auto bound = [&](std::size_t i, std::size_t j, bool upper) -> std::size_t {
    auto below = [&](std::size_t a, std::size_t b) { return upper ? q.leq_[a * n + b] != 0 : q.leq_[b * n + a] != 0; };
    for (std::size_t c = 0; c < n; ++c) {
      if (!below(i, c) || !below(j, c)) continue;
      bool least = true;
      for (std::size_t d = 0; d < n && least; ++d)
        if (below(i, d) && below(j, d) && !below(c, d)) least = false;
      if (least) return c;
    }
    fail(ErrorKind::validation, "quantale " + q.name_ + ": " + q.labels_[i] + " and " + q.labels_[j] + " have no " +
                                    (upper ? "join" : "meet") + " (not a lattice)");
  };
  q.join_.assign(n * n, 0);
  q.meet_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      q.join_[i * n + j] = static_cast<std::uint16_t>(bound(i, j, true));
      q.meet_[i * n + j] = static_cast<std::uint16_t>(bound(i, j, false));
    }
  std::size_t bot = 0, top = 0;
  for (std::size_t i = 1; i < n; ++i) {
    bot = q.meet_[bot * n + i];
    top = q.join_[top * n + i];
  }
  q.bottom_ = Value::index(bot);
  q.top_ = Value::index(top);
  q.unit_ = Value::index(unit);

  q.hom_.assign(n * n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t h = bot;
      for (std::size_t w = 0; w < n; ++w)
        if (q.leq_[q.tensor_[u * n + w] * n + v]) h = q.join_[h * n + w];
      q.hom_[u * n + v] = static_cast<std::uint16_t>(h);
    }
  return q;
}

Quantale Quantale::lawvere() {
  Quantale q;
  q.kind_ = Kind::lawvere;
  q.name_ = "lawvere";
  q.bottom_ = Value::infinity();
  q.top_ = Value::rational(0);
  q.unit_ = Value::rational(0);
  return q;
}

std::size_t Quantale::size() const {
  if (!is_finite()) fail(ErrorKind::capability, "quantale " + name_ + " has an infinite carrier");
  return n_;
}

std::vector<Value> Quantale::elements() const {
  std::vector<Value> out;
  out.reserve(size());
  for (std::size_t i = 0; i < n_; ++i) out.push_back(Value::index(i));
  return out;
}

bool Quantale::contains(const Value& v) const noexcept {
  if (kind_ == Kind::finite) return v.is_index() && v.index() < n_;
  return v.is_rational();
}

void Quantale::check(const Value& v) const {
  if (!contains(v)) fail(ErrorKind::mismatch, "value " + to_string(v) + " is not an element of quantale " + name_);
}

bool Quantale::leq(const Value& u, const Value& v) const {
  check(u);
  check(v);
  if (kind_ == Kind::finite) return leq_[at(u, v)] != 0;
  return !numeric_less(u, v);
}

Value Quantale::join(const Value& u, const Value& v) const {
  check(u);
  check(v);
  if (kind_ == Kind::finite) return Value::index(join_[at(u, v)]);
  return numeric_less(u, v) ? u : v;
}

Value Quantale::meet(const Value& u, const Value& v) const {
  check(u);
  check(v);
  if (kind_ == Kind::finite) return Value::index(meet_[at(u, v)]);
  return numeric_less(u, v) ? v : u;
}

Value Quantale::join(std::span<const Value> elems) const {
  Value acc = bottom_;
  for (const Value& v : elems) acc = join(acc, v);
  return acc;
}

Value Quantale::meet(std::span<const Value> elems) const {
  Value acc = top_;
  for (const Value& v : elems) acc = meet(acc, v);
  return acc;
}

Value Quantale::tensor(const Value& u, const Value& v) const {
  check(u);
  check(v);
  if (kind_ == Kind::finite) return Value::index(tensor_[at(u, v)]);
  return add(u, v);
}

Value Quantale::hom(const Value& u, const Value& v) const {
  check(u);
  check(v);
  if (kind_ == Kind::finite) return Value::index(hom_[at(u, v)]);
  return monus(v, u);
}

std::string Quantale::format(const Value& v) const {
  if (kind_ == Kind::finite && contains(v)) return labels_[v.index()];
  return to_string(v);
}

Value Quantale::parse(std::string_view text) const {
  auto bad = [&]() -> Value {
    fail(ErrorKind::parse, "'" + std::string(text) + "' is not an element of " + name_);
  };
  if (kind_ == Kind::finite) {
    for (std::size_t i = 0; i < n_; ++i)
      if (labels_[i] == text) return Value::index(i);
    if (name_ == "bool2") {
      if (text == "0" || text == "bot" || text == "false") return Value::index(0);
      if (text == "1" || text == "top" || text == "true") return Value::index(1);
    }
    if (text.size() > 1 && text[0] == '#') {
      std::int64_t i = 0;
      if (parse_int(text.substr(1), i) && i >= 0 && static_cast<std::size_t>(i) < n_)
        return Value::index(static_cast<std::size_t>(i));
    }
    return bad();
  }
  if (text == "inf" || text == "\xE2\x88\x9E" || text == "infinity") return Value::infinity();
  std::int64_t num = 0, den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den) || den <= 0 || num < 0)
      return bad();
    return Value::rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) return bad();
    std::int64_t w = 0, f = 0;
    if (!whole.empty() && !parse_int(whole, w)) return bad();
    if (!parse_int(frac, f) || f < 0 || w < 0 || frac.front() == '-' || frac.front() == '+') return bad();
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return add(Value::rational(w), Value::rational(f, den));
  }
  if (!parse_int(text, num) || num < 0) return bad();
  return Value::rational(num);
}

bool operator==(const Quantale& a, const Quantale& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ && a.n_ == b.n_ && a.leq_ == b.leq_ && a.tensor_ == b.tensor_ &&
         a.unit_ == b.unit_ && a.labels_ == b.labels_;
}

QuantaleRef builtin_quantale(std::string_view name) {
  if (name == "bool2") {
    return std::make_shared<const Quantale>(Quantale::finite_table(
        "bool2", {"\xE2\x8A\xA5", "\xE2\x8A\xA4"}, {{true, true}, {false, true}}, {{0, 0}, {0, 1}}, 1));
  }
  if (name == "lawvere") return std::make_shared<const Quantale>(Quantale::lawvere());
  if (name.starts_with("chain(") && name.ends_with(")")) {
    std::int64_t n = 0;
    if (!parse_int(name.substr(6, name.size() - 7), n))
      fail(ErrorKind::unknown_name, "unknown quantale '" + std::string(name) + "'");
    if (n < 2) fail(ErrorKind::precondition, "chain(n) requires n >= 2");
    if (n > 64) fail(ErrorKind::cap_exceeded, "chain(n) supports n <= 64");
    const auto size = static_cast<std::size_t>(n);
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size));
    std::vector<std::vector<std::size_t>> tensor(size, std::vector<std::size_t>(size));
    for (std::size_t i = 0; i < size; ++i) {
      labels.push_back(std::to_string(i));
      for (std::size_t j = 0; j < size; ++j) {
        leq[i][j] = i <= j;
        tensor[i][j] = std::min(i, j);
      }
    }
    return std::make_shared<const Quantale>(
        Quantale::finite_table(std::string(name), std::move(labels), leq, tensor, size - 1));
  }
  fail(ErrorKind::unknown_name, "unknown quantale '" + std::string(name) + "'");
}

std::vector<Value> default_lawvere_sample() {
  std::vector<Value> s = {Value::rational(0), Value::infinity()};
  for (std::int64_t d : {1, 2, 3})
    for (std::int64_t n = 1; n <= 7; ++n) s.push_back(Value::rational(n, d));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

AuditReport audit_quantale(const Quantale& q, const QuantaleAuditOptions& options) {
  AuditReport report;
  report.subject = "quantale " + q.name();
  std::vector<Value> carrier;
  if (q.is_finite()) {
    carrier = q.elements();
  } else {
    report.sampled = true;
    carrier = options.lawvere_sample.empty() ? default_lawvere_sample() : options.lawvere_sample;
    carrier.push_back(Value::rational(0));
    carrier.push_back(Value::infinity());
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  }
  const std::size_t n = carrier.size();

  // subsets used for completeness and distributivity
  std::vector<std::vector<Value>> subsets;
  if (n <= options.exhaustive_subsets_up_to) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Value> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) s.push_back(carrier[i]);
      subsets.push_back(std::move(s));
    }
  } else {
    report.sampled = true;
    std::mt19937_64 rng(options.seed);
    subsets.push_back({});
    for (const Value& u : carrier)
      for (const Value& v : carrier) subsets.push_back({u, v});
    std::bernoulli_distribution coin(0.5);
    for (std::size_t r = 0; r < options.random_subsets; ++r) {
      std::vector<Value> s;
      for (const Value& v : carrier)
        if (coin(rng)) s.push_back(v);
      subsets.push_back(std::move(s));
    }
  }

  std::string witness;
  auto first = [&](const std::string& w) {
    if (witness.empty()) witness = w;
  };

  witness.clear();
  for (const Value& u : carrier)
    for (const Value& v : carrier) {
      if (u != v && q.leq(u, v) && q.leq(v, u)) first(fmt3(q, "u", u, "v", v));
      for (const Value& w : carrier)
        if (q.leq(u, v) && q.leq(v, w) && !q.leq(u, w)) first(fmt3(q, "u", u, "v", v, "w", &w));
    }
  for (const Value& u : carrier)
    if (!q.leq(u, u)) first("u=" + q.format(u));
  report.record("partial order", witness);

  witness.clear();
  for (const auto& s : subsets) {
    const Value j = q.join(s), m = q.meet(s);
    for (const Value& x : s)
      if (!q.leq(x, j) || !q.leq(m, x)) first("subset element " + q.format(x) + " not bounded by join/meet");
    for (const Value& b : carrier) {
      bool upper = std::all_of(s.begin(), s.end(), [&](const Value& x) { return q.leq(x, b); });
      bool lower = std::all_of(s.begin(), s.end(), [&](const Value& x) { return q.leq(b, x); });
      if (upper && !q.leq(j, b)) first("join " + q.format(j) + " not least: bound " + q.format(b));
      if (lower && !q.leq(b, m)) first("meet " + q.format(m) + " not greatest: bound " + q.format(b));
    }
    if (!witness.empty()) break;
  }
  report.record("lattice completeness", witness);

  witness.clear();
  for (const Value& u : carrier)
    for (const Value& v : carrier)
      for (const Value& w : carrier)
        if (q.tensor(q.tensor(u, v), w) != q.tensor(u, q.tensor(v, w))) first(fmt3(q, "u", u, "v", v, "w", &w));
  report.record("associativity", witness);

  witness.clear();
  for (const Value& u : carrier)
    for (const Value& v : carrier)
      if (q.tensor(u, v) != q.tensor(v, u)) first(fmt3(q, "u", u, "v", v));
  report.record("commutativity", witness);

  witness.clear();
  for (const Value& u : carrier)
    if (q.tensor(q.unit(), u) != u || q.tensor(u, q.unit()) != u) first("u=" + q.format(u));
  report.record("unit", witness);

  witness.clear();
  for (const Value& u : carrier)
    for (const auto& s : subsets) {
      std::vector<Value> image;
      for (const Value& x : s) image.push_back(q.tensor(u, x));
      if (q.tensor(u, q.join(s)) != q.join(image)) {
        std::string list;
        for (const Value& x : s) list += (list.empty() ? "" : ",") + q.format(x);
        first("u=" + q.format(u) + ", S={" + list + "}");
      }
    }
  report.record("join distributivity", witness);

  witness.clear();
  for (const Value& u : carrier)
    for (const Value& v : carrier)
      for (const Value& w : carrier)
        if (q.leq(q.tensor(u, w), v) != q.leq(w, q.hom(u, v))) first(fmt3(q, "u", u, "v", v, "w", &w));
  report.record("hom adjunction", witness);
  return report;
}

}  // namespace tvcat
