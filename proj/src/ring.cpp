#include "modclass/ring.hpp"

#include <algorithm>
#include <sstream>

#include "modclass/errors.hpp"
#include "modclass/limits.hpp"

namespace modclass {

// ---------------------------------------------------------------- RingSpec

RingSpec RingSpec::zmod(std::uint32_t n) {
  RingSpec s;
  s.kind = Kind::ZMod;
  s.n = n;
  return s;
}

RingSpec RingSpec::gf(std::uint32_t q) {
  RingSpec s;
  s.kind = Kind::GF;
  s.q = q;
  return s;
}

RingSpec RingSpec::poly_quotient(std::uint32_t q, std::vector<std::uint32_t> f) {
  RingSpec s;
  s.kind = Kind::PolyQuotient;
  s.q = q;
  s.poly = std::move(f);
  return s;
}

RingSpec RingSpec::ut2(std::uint32_t q) {
  RingSpec s;
  s.kind = Kind::UT2;
  s.q = q;
  return s;
}

RingSpec RingSpec::ut2_rel(std::uint32_t q, std::uint32_t d) {
  RingSpec s;
  s.kind = Kind::UT2Rel;
  s.q = q;
  s.d = d;
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

nlohmann::json RingSpec::to_json() const {
  using nlohmann::json;
  switch (kind) {
    case Kind::ZMod:
      return json{{"type", "zmod"}, {"n", n}};
    case Kind::GF:
      return json{{"type", "gf"}, {"q", q}};
    case Kind::PolyQuotient:
      return json{{"type", "poly_quotient"}, {"q", q}, {"f", poly}};
    case Kind::UT2:
      return json{{"type", "ut2"}, {"q", q}};
    case Kind::UT2Rel:
      return json{{"type", "ut2_rel"}, {"q", q}, {"d", d}};
    case Kind::Product: {
      json fs = json::array();
      for (const auto& f : factors) fs.push_back(f.to_json());
      return json{{"type", "product"}, {"factors", fs}};
    }
    case Kind::Tables:
      return json{{"type", "tables"}, {"add", add_table}, {"mul", mul_table}, {"one", one}};
  }
  return {};
}

namespace {

std::uint32_t positive_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw InvalidSpec(std::string("ring spec is missing \"") + key + "\": " + j.dump());
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 0xFFFFFFFFLL) {
    throw InvalidSpec(std::string("ring spec field \"") + key + "\" must be a positive integer: " + j.dump());
  }
  return v.get<std::uint32_t>();
}

std::vector<std::vector<std::uint32_t>> table_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw InvalidSpec(std::string("tables spec needs an array \"") + key + "\"");
  }
  try {
    return j.at(key).get<std::vector<std::vector<std::uint32_t>>>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidSpec(std::string("tables spec field \"") + key + "\" must be a matrix of indices");
  }
}

}  // namespace

RingSpec RingSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw InvalidSpec("ring spec must be an object with a string \"type\": " + j.dump());
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "zmod") return zmod(positive_field(j, "n"));
  if (type == "gf") return gf(positive_field(j, "q"));
  if (type == "ut2") return ut2(positive_field(j, "q"));
  if (type == "ut2_rel") return ut2_rel(positive_field(j, "q"), positive_field(j, "d"));
  if (type == "poly_quotient") {
    if (!j.contains("f") || !j.at("f").is_array()) throw InvalidSpec("poly_quotient needs a coefficient list \"f\": " + j.dump());
    std::vector<std::uint32_t> f;
    try {
      f = j.at("f").get<std::vector<std::uint32_t>>();
    } catch (const nlohmann::json::exception&) {
      throw InvalidSpec("poly_quotient coefficients must be non-negative integers: " + j.dump());
    }
    return poly_quotient(positive_field(j, "q"), std::move(f));
  }
  if (type == "product") {
    if (!j.contains("factors") || !j.at("factors").is_array() || j.at("factors").empty()) {
      throw InvalidSpec("product needs a non-empty \"factors\" array: " + j.dump());
    }
    std::vector<RingSpec> fs;
    for (const auto& f : j.at("factors")) fs.push_back(from_json(f));
    return product(std::move(fs));
  }
  if (type == "tables") {
    RingSpec s;
    s.kind = Kind::Tables;
    s.add_table = table_field(j, "add");
    s.mul_table = table_field(j, "mul");
    if (!j.contains("one") || !j.at("one").is_number_integer() || j.at("one").get<long long>() < 0) {
      throw InvalidSpec("tables spec needs a non-negative integer \"one\"");
    }
    s.one = j.at("one").get<std::uint32_t>();
    return s;
  }
  throw InvalidSpec("unknown ring type \"" + type + "\"");
}

RingSpec RingSpec::parse(const std::string& text) {
  auto trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
  if (!trimmed.empty() && trimmed.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(trimmed);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidSpec("ring spec is not valid JSON: " + text);
    }
    return from_json(j);
  }
  const auto colon = trimmed.find(':');
  if (colon == std::string::npos) throw InvalidSpec("unrecognised ring shorthand: " + text);
  const std::string name = trimmed.substr(0, colon);
  std::vector<std::uint32_t> args;
  std::stringstream ss(trimmed.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument("bad");
      args.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw InvalidSpec("bad number \"" + item + "\" in ring shorthand: " + text);
    }
  }
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw InvalidSpec("wrong number of arguments in ring shorthand: " + text);
  };
  if (name == "zmod") {
    need(1);
    return zmod(args[0]);
  }
  if (name == "gf") {
    need(1);
    return gf(args[0]);
  }
  if (name == "ut2") {
    need(1);
    return ut2(args[0]);
  }
  if (name == "ut2rel" || name == "ut2_rel") {
    need(2);
    return ut2_rel(args[0], args[1]);
  }
  throw InvalidSpec("unrecognised ring shorthand: " + text);
}

std::string RingSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ZMod:
      os << "Z/" << n;
      break;
    case Kind::GF:
      os << "GF(" << q << ")";
      break;
    case Kind::PolyQuotient: {
      os << "GF(" << q << ")[x]/(";
      bool first = true;
      for (std::size_t i = poly.size(); i-- > 0;) {
        if (poly[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || poly[i] != 1) os << poly[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
      }
      os << ")";
      break;
    }
    case Kind::UT2:
      os << "UT2(GF(" << q << "))";
      break;
    case Kind::UT2Rel:
      os << "UT2(GF(" << q << "^" << d << "), GF(" << q << "))";
      break;
    case Kind::Product:
      for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " x " : "") << factors[i].describe();
      break;
    case Kind::Tables:
      os << "tables(" << add_table.size() << ")";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------- GaloisField

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending degree, over Z/p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic m over Z/p
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (std::uint64_t{c} * m[i]) % p) % p);
    }
    trim(a);
  }
  return a;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly g(dd + 1, 0);
      std::uint64_t x = t;
      for (std::size_t i = 0; i < dd; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[dd] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
  auto [p, k] = prime_power(q);
  if (p == 0) throw InvalidSpec("field order " + std::to_string(q) + " is not a prime power");
  p_ = p;
  k_ = k;
  // first monic irreducible of degree k in lexicographic coefficient order
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly f(k + 1, 0);
    std::uint64_t x = t;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    f[k] = 1;
    if (irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
  auto to_poly = [&](std::uint32_t a) {
    Poly r(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      r[i] = a % p;
      a /= p;
    }
    return r;
  };
  auto from_poly = [&](const Poly& r) {
    std::uint32_t a = 0;
    for (std::size_t i = r.size(); i-- > 0;) a = a * p + r[i];
    return a;
  };
  add_.assign(std::size_t{q} * q, 0);
  mul_.assign(std::size_t{q} * q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly pa = to_poly(a);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly pb = to_poly(b);
      Poly s(k, 0);
      for (std::uint32_t i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
      add_[a * q + b] = from_poly(s);
      Poly prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) {
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
        }
      }
      Poly r = poly_mod(prod, modulus_, p);
      r.resize(k, 0);
      mul_[a * q + b] = from_poly(r);
    }
  }
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < q_; ++b) {
    if (add(a, b) == 0) return b;
  }
  return 0;
}

std::uint32_t GaloisField::power(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = q_ > 1 ? 1 : 0;
  std::uint32_t b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> GaloisField::subfield(std::uint32_t s) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < q_; ++x) {
    if (power(x, s) == x) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------- FiniteRing

bool FiniteRing::is_commutative() const {
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> FiniteRing::add_table() const {
  std::vector<std::vector<std::uint32_t>> t(n_, std::vector<std::uint32_t>(n_));
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b) t[a][b] = add(a, b);
  return t;
}

std::vector<std::vector<std::uint32_t>> FiniteRing::mul_table() const {
  std::vector<std::vector<std::uint32_t>> t(n_, std::vector<std::uint32_t>(n_));
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

std::string FiniteRing::element_label(std::uint32_t x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

namespace {

std::string triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

RingPtr FiniteRing::from_tables(std::vector<std::vector<std::uint32_t>> add,
                                std::vector<std::vector<std::uint32_t>> mul, std::uint32_t one,
                                RingSpec origin, std::vector<std::string> labels) {
  const std::size_t n = add.size();
  if (n == 0) throw InvalidSpec("ring tables are empty");
  if (n > limits().ring_size) {
    throw SizeLimit("ring of size " + std::to_string(n) + " exceeds the ring cap " + std::to_string(limits().ring_size));
  }
  if (mul.size() != n) throw InvalidSpec("add and mul tables differ in size");
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n) throw InvalidSpec("ring tables must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (add[i][j] >= n || mul[i][j] >= n) throw InvalidSpec("ring table entry out of range");
    }
  }
  if (one >= n) throw InvalidSpec("ring unit index out of range");

  auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
  r->n_ = static_cast<std::uint32_t>(n);
  r->add_.resize(n * n);
  r->mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r->add_[i * n + j] = static_cast<std::uint16_t>(add[i][j]);
      r->mul_[i * n + j] = static_cast<std::uint16_t>(mul[i][j]);
    }
  }
  r->one_ = one;
  r->spec_ = std::move(origin);
  r->labels_ = std::move(labels);
  const FiniteRing& R = *r;
  const auto N = static_cast<std::uint32_t>(n);

  // (R, +) is an abelian group with identity 0
  for (std::uint32_t a = 0; a < N; ++a) {
    if (R.add(0, a) != a || R.add(a, 0) != a) throw AxiomViolation("0 is not an additive identity at " + std::to_string(a));
    for (std::uint32_t b = 0; b < N; ++b) {
      if (R.add(a, b) != R.add(b, a)) throw AxiomViolation("addition not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  r->neg_.assign(N, N);
  for (std::uint32_t a = 0; a < N; ++a) {
    for (std::uint32_t b = 0; b < N; ++b) {
      if (R.add(a, b) == 0) {
        r->neg_[a] = b;
        break;
      }
    }
    if (r->neg_[a] == N) throw AxiomViolation("element " + std::to_string(a) + " has no additive inverse");
  }
  for (std::uint32_t a = 0; a < N; ++a) {
    for (std::uint32_t b = 0; b < N; ++b) {
      const std::uint32_t ab = R.add(a, b);
      const std::uint32_t mab = R.mul(a, b);
      for (std::uint32_t c = 0; c < N; ++c) {
        if (R.add(ab, c) != R.add(a, R.add(b, c))) throw AxiomViolation("addition not associative at " + triple(a, b, c));
        if (R.mul(mab, c) != R.mul(a, R.mul(b, c))) throw AxiomViolation("multiplication not associative at " + triple(a, b, c));
        if (R.mul(a, R.add(b, c)) != R.add(mab, R.mul(a, c))) throw AxiomViolation("left distributivity fails at " + triple(a, b, c));
        if (R.mul(ab, c) != R.add(R.mul(a, c), R.mul(b, c))) throw AxiomViolation("right distributivity fails at " + triple(a, b, c));
      }
    }
  }
  for (std::uint32_t a = 0; a < N; ++a) {
    if (R.mul(one, a) != a || R.mul(a, one) != a) throw AxiomViolation("unit fails at " + std::to_string(a));
  }
  std::uint32_t c = 1;
  for (std::uint32_t x = one; x != 0; x = R.add(x, one)) ++c;
  r->characteristic_ = one == 0 ? 1 : c;
  r->additive_ = AbelianLayout::discover(N, [&R](std::uint32_t a, std::uint32_t b) { return R.add(a, b); });
  return r;
}

// ---------------------------------------------------------------- builders

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;

struct Tables {
  Table add, mul;
  std::uint32_t one = 0;
  std::vector<std::string> labels;
};

void check_size(std::uint64_t n) {
  if (n > limits().ring_size) {
    throw SizeLimit("ring of size " + std::to_string(n) + " exceeds the ring cap " + std::to_string(limits().ring_size));
  }
}

Tables tables_of(const RingSpec& spec);

Tables zmod_tables(std::uint32_t n) {
  check_size(n);
  Tables t;
  t.add.assign(n, std::vector<std::uint32_t>(n));
  t.mul.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    t.labels.push_back(std::to_string(a));
    for (std::uint32_t b = 0; b < n; ++b) {
      t.add[a][b] = (a + b) % n;
      t.mul[a][b] = static_cast<std::uint32_t>((std::uint64_t{a} * b) % n);
    }
  }
  t.one = n == 1 ? 0 : 1;
  return t;
}

std::string field_label(const GaloisField& f, std::uint32_t a) {
  if (f.degree() == 1) return std::to_string(a);
  std::string s;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    s.insert(s.begin(), static_cast<char>('0' + a % f.prime()));
    a /= f.prime();
  }
  return "[" + s + "]";
}

Tables gf_tables(std::uint32_t q) {
  check_size(q);
  GaloisField f(q);
  Tables t;
  t.add.assign(q, std::vector<std::uint32_t>(q));
  t.mul.assign(q, std::vector<std::uint32_t>(q));
  for (std::uint32_t a = 0; a < q; ++a) {
    t.labels.push_back(field_label(f, a));
    for (std::uint32_t b = 0; b < q; ++b) {
      t.add[a][b] = f.add(a, b);
      t.mul[a][b] = f.mul(a, b);
    }
  }
  t.one = 1;
  return t;
}

Tables poly_quotient_tables(std::uint32_t q, const std::vector<std::uint32_t>& f) {
  GaloisField field(q);
  if (f.size() < 2) throw InvalidSpec("poly_quotient modulus must have degree >= 1");
  if (f.back() != 1) throw InvalidSpec("poly_quotient modulus must be monic (leading coefficient 1)");
  for (auto c : f) {
    if (c >= q) throw InvalidSpec("poly_quotient coefficient " + std::to_string(c) + " is not an element of GF(" + std::to_string(q) + ")");
  }
  const std::size_t d = f.size() - 1;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= q;
    check_size(n);
  }
  const auto N = static_cast<std::uint32_t>(n);
  auto to_poly = [&](std::uint32_t a) {
    std::vector<std::uint32_t> r(d);
    for (std::size_t i = 0; i < d; ++i) {
      r[i] = a % q;
      a /= q;
    }
    return r;
  };
  auto from_poly = [&](const std::vector<std::uint32_t>& r) {
    std::uint32_t a = 0;
    for (std::size_t i = d; i-- > 0;) a = a * q + r[i];
    return a;
  };
  Tables t;
  t.add.assign(N, std::vector<std::uint32_t>(N));
  t.mul.assign(N, std::vector<std::uint32_t>(N));
  for (std::uint32_t a = 0; a < N; ++a) {
    const auto pa = to_poly(a);
    std::string label;
    for (std::size_t i = d; i-- > 0;) label += field_label(field, pa[i]) + (i ? " " : "");
    t.labels.push_back("(" + label + ")");
    for (std::uint32_t b = 0; b < N; ++b) {
      const auto pb = to_poly(b);
      std::vector<std::uint32_t> s(d);
      for (std::size_t i = 0; i < d; ++i) s[i] = field.add(pa[i], pb[i]);
      t.add[a][b] = from_poly(s);
      std::vector<std::uint32_t> prod(2 * d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = field.add(prod[i + j], field.mul(pa[i], pb[j]));
      for (std::size_t m = 2 * d - 1; m >= d; --m) {
        const std::uint32_t c = prod[m];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= d; ++i) prod[m - d + i] = field.add(prod[m - d + i], field.neg(field.mul(c, f[i])));
      }
      prod.resize(d);
      t.mul[a][b] = from_poly(prod);
    }
  }
  t.one = 1;
  return t;
}

Tables ut2_rel_tables(std::uint32_t q, std::uint32_t d) {
  if (prime_power(q).first == 0) throw InvalidSpec("ut2 field order " + std::to_string(q) + " is not a prime power");
  std::uint64_t fq = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    fq *= q;
    if (fq > limits().ring_size) check_size(fq * fq * q);
  }
  check_size(fq * fq * q);
  GaloisField big(static_cast<std::uint32_t>(fq));
  const std::vector<std::uint32_t> sub = big.subfield(q);
  if (sub.size() != q) throw InvalidSpec("GF(" + std::to_string(fq) + ") has no subfield of order " + std::to_string(q));
  std::vector<std::uint32_t> rank(fq, 0);
  for (std::uint32_t i = 0; i < sub.size(); ++i) rank[sub[i]] = i;
  const auto F = static_cast<std::uint32_t>(fq);
  const std::uint32_t N = F * F * q;
  auto enc = [&](std::uint32_t f1, std::uint32_t f2, std::uint32_t k) { return (f1 * F + f2) * q + k; };
  Tables t;
  t.add.assign(N, std::vector<std::uint32_t>(N));
  t.mul.assign(N, std::vector<std::uint32_t>(N));
  for (std::uint32_t a = 0; a < N; ++a) {
    const std::uint32_t a1 = a / (F * q);
    const std::uint32_t a2 = (a / q) % F;
    const std::uint32_t ak = sub[a % q];
    t.labels.push_back("(" + field_label(big, a1) + "," + field_label(big, a2) + ";0," + field_label(big, ak) + ")");
    for (std::uint32_t b = 0; b < N; ++b) {
      const std::uint32_t b1 = b / (F * q);
      const std::uint32_t b2 = (b / q) % F;
      const std::uint32_t bk = sub[b % q];
      t.add[a][b] = enc(big.add(a1, b1), big.add(a2, b2), rank[big.add(ak, bk)]);
      t.mul[a][b] = enc(big.mul(a1, b1), big.add(big.mul(a1, b2), big.mul(a2, bk)), rank[big.mul(ak, bk)]);
    }
  }
  t.one = enc(1, 0, rank[1]);
  return t;
}

Tables product_tables(const std::vector<RingSpec>& factors) {
  if (factors.empty()) throw InvalidSpec("product of zero rings");
  Tables acc = tables_of(factors[0]);
  for (std::size_t f = 1; f < factors.size(); ++f) {
    Tables nxt = tables_of(factors[f]);
    const auto A = static_cast<std::uint32_t>(acc.add.size());
    const auto B = static_cast<std::uint32_t>(nxt.add.size());
    check_size(std::uint64_t{A} * B);
    const std::uint32_t N = A * B;
    Tables t;
    t.add.assign(N, std::vector<std::uint32_t>(N));
    t.mul.assign(N, std::vector<std::uint32_t>(N));
    for (std::uint32_t x = 0; x < N; ++x) {
      t.labels.push_back(acc.labels[x / B] + "|" + nxt.labels[x % B]);
      for (std::uint32_t y = 0; y < N; ++y) {
        t.add[x][y] = acc.add[x / B][y / B] * B + nxt.add[x % B][y % B];
        t.mul[x][y] = acc.mul[x / B][y / B] * B + nxt.mul[x % B][y % B];
      }
    }
    t.one = acc.one * B + nxt.one;
    acc = std::move(t);
  }
  return acc;
}

Tables tables_of(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::ZMod:
      if (spec.n < 1) throw InvalidSpec("zmod needs n >= 1");
      return zmod_tables(spec.n);
    case RingSpec::Kind::GF:
      return gf_tables(spec.q);
    case RingSpec::Kind::PolyQuotient:
      return poly_quotient_tables(spec.q, spec.poly);
    case RingSpec::Kind::UT2:
      return ut2_rel_tables(spec.q, 1);
    case RingSpec::Kind::UT2Rel:
      if (spec.d < 1) throw InvalidSpec("ut2_rel needs d >= 1");
      return ut2_rel_tables(spec.q, spec.d);
    case RingSpec::Kind::Product:
      return product_tables(spec.factors);
    case RingSpec::Kind::Tables: {
      Tables t;
      t.add = spec.add_table;
      t.mul = spec.mul_table;
      t.one = spec.one;
      return t;
    }
  }
  throw InvalidSpec("unknown ring kind");
}

}  // namespace

RingPtr build_ring(const RingSpec& spec) {
  Tables t = tables_of(spec);
  return FiniteRing::from_tables(std::move(t.add), std::move(t.mul), t.one, spec, std::move(t.labels));
}

RingPtr opposite_ring(const FiniteRing& r) {
  auto mul = r.mul_table();
  for (std::uint32_t a = 0; a < r.size(); ++a)
    for (std::uint32_t b = a + 1; b < r.size(); ++b) std::swap(mul[a][b], mul[b][a]);
  std::vector<std::string> labels;
  for (std::uint32_t x = 0; x < r.size(); ++x) labels.push_back(r.element_label(x));
  return FiniteRing::from_tables(r.add_table(), std::move(mul), r.one(), r.spec(), std::move(labels));
}

bool same_ring(const FiniteRing& a, const FiniteRing& b) { return &a == &b || a.same_tables(b); }

}  // namespace modclass
