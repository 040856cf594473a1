#include "qfcodes/gf_tower.hpp"

#include "qfcodes/errors.hpp"

#include <numeric>
#include <string>

namespace qfcodes {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp) {
  BigInt v = ipow(base, exp);
  if (v > Field::kMaxSize) {
    throw ResourceError("field of size " + v.str() + " is too large for table arithmetic", v.str(),
                        Field::kMaxSize);
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::prime(unsigned p) {
  if (!qfcodes::is_prime(p) || p == 2) throw ParameterError("characteristic must be an odd prime, got " + std::to_string(p));
  if (p >= kMaxSize) throw ParameterError("characteristic too large for table arithmetic");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->size_ = p;
  f->build_tables();
  return f;
}

FieldPtr Field::extension(FieldPtr base, Poly modulus) {
  if (!base) throw ParameterError("extension needs a base field");
  modulus = poly::trim(std::move(modulus));
  int d = poly::degree(modulus);
  if (d < 1) throw ParameterError("modulus must have degree at least 1");
  for (Index c : modulus)
    if (c >= base->size()) throw ParameterError("modulus coefficient outside the base field");
  if (modulus.back() != 1) throw ParameterError("modulus must be monic");
  if (!is_irreducible(*base, modulus)) throw ParameterError("modulus is reducible over the base field");

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = base->characteristic();
  f->degree_ = unsigned(d);
  f->abs_degree_ = base->absolute_degree() * unsigned(d);
  f->size_ = Index(checked_power(base->size(), unsigned(d)));
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  f->build_tables();
  return f;
}

bool Field::contains(const Field& sub) const {
  for (const Field* f = this; f != nullptr; f = f->base_.get())
    if (f == &sub) return true;
  return false;
}

Index Field::add_digits(Index x, Index y) const {
  Index r = 0, pw = 1;
  while (x != 0 || y != 0) {
    r += ((x % p_ + y % p_) % p_) * pw;
    x /= p_;
    y /= p_;
    pw *= p_;
  }
  return r;
}

Index Field::mul_reference(Index x, Index y) const {
  if (is_prime()) return Index(std::uint64_t(x) * y % p_);
  const Field& b = *base_;
  auto cx = coeffs(x), cy = coeffs(y);
  std::vector<Index> prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (cx[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) prod[i + j] = b.add(prod[i + j], b.mul(cx[i], cy[j]));
  }
  for (unsigned k = 2 * degree_ - 2; k >= degree_; --k) {
    Index t = prod[k];
    if (t == 0) continue;
    prod[k] = 0;
    for (unsigned j = 0; j < degree_; ++j) prod[k - degree_ + j] = b.sub(prod[k - degree_ + j], b.mul(t, modulus_[j]));
  }
  prod.resize(degree_);
  return from_coeffs(prod);
}

Index Field::pow_reference(Index x, std::uint64_t e) const {
  Index r = 1;
  while (e) {
    if (e & 1) r = mul_reference(r, x);
    x = mul_reference(x, x);
    e >>= 1;
  }
  return r;
}

void Field::build_tables() {
  neg_table_.resize(size_);
  for (Index x = 0; x < size_; ++x) {
    Index r = 0, pw = 1;
    for (Index v = x; v != 0; v /= p_, pw *= p_) r += ((p_ - v % p_) % p_) * pw;
    neg_table_[x] = r;
  }
  if (size_ <= 256) {
    add_table_.resize(std::size_t(size_) * size_);
    for (Index x = 0; x < size_; ++x)
      for (Index y = 0; y < size_; ++y) add_table_[std::size_t(x) * size_ + y] = add_digits(x, y);
  }

  const std::uint64_t n = size_ - 1;
  const auto factors = prime_factors(n);
  primitive_ = 0;
  for (Index x = 1; x < size_ && primitive_ == 0; ++x) {
    bool full = true;
    for (auto l : factors)
      if (pow_reference(x, n / l) == 1) {
        full = false;
        break;
      }
    if (full) primitive_ = x;
  }
  if (primitive_ == 0) throw std::logic_error("no primitive element found; modulus not irreducible");

  exp_.resize(2 * n);
  log_.assign(size_, 0);
  Index acc = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    exp_[k] = acc;
    log_[acc] = Index(k);
    acc = mul_reference(acc, primitive_);
  }
  if (acc != 1) throw std::logic_error("primitive element order mismatch");
  for (std::uint64_t k = n; k < 2 * n; ++k) exp_[k] = exp_[k - n];
}

Index Field::inv(Index x) const {
  if (x == 0) throw DomainError("inverse of zero");
  const Index n = size_ - 1;
  return exp_[(n - log_[x]) % n];
}

Index Field::pow(Index x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  const std::uint64_t n = size_ - 1;
  return exp_[(std::uint64_t(log_[x]) * (e % n)) % n];
}

Index Field::pow(Index x, const BigInt& e) const {
  if (e == 0) return 1;
  if (e < 0) return pow(inv(x), BigInt(-e));
  if (x == 0) return 0;
  BigInt r = e % (size_ - 1);
  return pow(x, static_cast<std::uint64_t>(r));
}

Index Field::from_int(long long n) const {
  long long r = n % (long long)p_;
  if (r < 0) r += p_;
  return Index(r);
}

std::uint64_t Field::log(Index x) const {
  if (x == 0) throw DomainError("logarithm of zero");
  return log_[x];
}

std::uint64_t Field::order(Index x) const {
  if (x == 0) throw DomainError("order of zero");
  const std::uint64_t n = size_ - 1;
  return n / std::gcd(n, std::uint64_t(log_[x]));
}

std::vector<Index> Field::coeffs(Index x) const {
  if (is_prime()) return {x};
  const Index Q = base_->size();
  std::vector<Index> c(degree_);
  for (unsigned i = 0; i < degree_; ++i, x /= Q) c[i] = x % Q;
  return c;
}

Index Field::from_coeffs(std::span<const Index> c) const {
  if (c.size() != degree_) throw ParameterError("coefficient vector has the wrong length");
  if (is_prime()) {
    if (c[0] >= p_) throw ParameterError("coefficient outside the prime field");
    return c[0];
  }
  const Index Q = base_->size();
  Index r = 0, pw = 1;
  for (unsigned i = 0; i < degree_; ++i, pw *= Q) {
    if (c[i] >= Q) throw ParameterError("coefficient outside the base field");
    r += c[i] * pw;
  }
  return r;
}

Index Field::trace_to(const Field& target, Index x) const {
  if (!contains(target)) throw FieldMismatch("trace target is not a subfield in this tower");
  const unsigned s = abs_degree_ / target.absolute_degree();
  const Index Q = target.size();
  Index acc = 0, y = x;
  for (unsigned j = 0; j < s; ++j) {
    acc = add(acc, y);
    y = pow(y, std::uint64_t(Q));
  }
  if (acc >= Q) throw std::logic_error("trace value escaped the target subfield");
  return acc;
}

std::vector<Index> Field::trace_table(const Field& target) const {
  std::vector<Index> t(size_);
  for (Index x = 0; x < size_; ++x) t[x] = trace_to(target, x);
  return t;
}

std::vector<Index> Field::ordering() const {
  std::vector<Index> w(size_);
  w[0] = 0;
  for (Index i = 1; i < size_; ++i) w[i] = exp_[i - 1];
  return w;
}

// ---------------------------------------------------------------------------
// Elem

Elem::Elem(FieldPtr field, Index index) : field_(std::move(field)), index_(index) {
  if (!field_) throw ParameterError("element without a field");
  if (index_ >= field_->size()) throw ParameterError("element index outside the field");
}

void Elem::check_same(const Elem& o) const {
  if (field_ != o.field_) throw FieldMismatch("operands belong to different fields");
}

Elem Elem::operator+(const Elem& o) const {
  check_same(o);
  return {field_, field_->add(index_, o.index_)};
}
Elem Elem::operator-(const Elem& o) const {
  check_same(o);
  return {field_, field_->sub(index_, o.index_)};
}
Elem Elem::operator*(const Elem& o) const {
  check_same(o);
  return {field_, field_->mul(index_, o.index_)};
}
Elem Elem::operator/(const Elem& o) const {
  check_same(o);
  return {field_, field_->div(index_, o.index_)};
}

// ---------------------------------------------------------------------------
// Polynomials over a field

namespace poly {

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const Poly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Index x = i < a.size() ? a[i] : 0;
    Index y = i < b.size() ? b[i] : 0;
    r[i] = f.sub(x, y);
  }
  return trim(std::move(r));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return trim(std::move(r));
}

Poly mod(const Field& f, Poly a, const Poly& m) {
  const int dm = degree(m);
  if (dm < 0) throw DomainError("polynomial reduction modulo zero");
  const Index lead_inv = f.inv(m[dm]);
  a = trim(std::move(a));
  for (int k = int(a.size()) - 1; k >= dm; --k) {
    Index t = f.mul(a[k], lead_inv);
    if (t == 0) continue;
    for (int j = 0; j <= dm; ++j) a[k - dm + j] = f.sub(a[k - dm + j], f.mul(t, m[j]));
  }
  return trim(std::move(a));
}

Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) { return mod(f, mul(f, a, b), m); }

Poly powmod(const Field& f, Poly a, std::uint64_t e, const Poly& m) {
  Poly r = mod(f, Poly{1}, m);
  a = mod(f, std::move(a), m);
  while (e) {
    if (e & 1) r = mulmod(f, r, a, m);
    a = mulmod(f, a, a, m);
    e >>= 1;
  }
  return r;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Index li = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, li);
  }
  return a;
}

}  // namespace poly

bool is_irreducible(const Field& base, const Poly& f_in) {
  Poly f = poly::trim(f_in);
  const int d = poly::degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  // h[k] = x^{Q^k} mod f
  std::vector<Poly> h(d + 1);
  h[0] = poly::mod(base, x, f);
  for (int k = 1; k <= d; ++k) h[k] = poly::powmod(base, h[k - 1], base.size(), f);
  if (poly::sub(base, h[d], h[0]).size() != 0) return false;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    Poly g = poly::gcd(base, f, poly::sub(base, h[e], x));
    if (poly::degree(g) != 0) return false;
  }
  return true;
}

Poly find_irreducible(const Field& base, unsigned degree) {
  if (degree < 1) throw ParameterError("irreducible polynomial degree must be at least 1");
  const std::uint64_t Q = base.size();
  const std::uint64_t count = checked_power(Q, degree);
  Poly f(degree + 1, 0);
  f[degree] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t v = n;
    for (unsigned i = 0; i < degree; ++i, v /= Q) f[i] = Index(v % Q);
    if (is_irreducible(base, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldTower build_tower(unsigned p, unsigned m, unsigned m1, unsigned m2) {
  if (m < 1 || m1 < 1 || m2 < 1) throw ParameterError("tower degrees must be positive");
  FieldTower t;
  t.params = {p, m, m1, m2};
  t.fp = Field::prime(p);
  t.fq = m == 1 ? t.fp : Field::extension(t.fp, find_irreducible(*t.fp, m));
  t.f1 = m1 == 1 ? t.fq : Field::extension(t.fq, find_irreducible(*t.fq, m1));
  if (m2 == m1)
    t.f2 = t.f1;
  else
    t.f2 = m2 == 1 ? t.fq : Field::extension(t.fq, find_irreducible(*t.fq, m2));
  return t;
}

namespace {

nlohmann::json elem_record(const Field& f, Index x) {
  if (f.is_prime()) return x;
  auto arr = nlohmann::json::array();
  for (Index c : f.coeffs(x)) arr.push_back(elem_record(*f.base(), c));
  return arr;
}

nlohmann::json modulus_record(const Field& f) {
  auto arr = nlohmann::json::array();
  if (f.is_prime()) return arr;
  for (Index c : f.modulus()) arr.push_back(elem_record(*f.base(), c));
  return arr;
}

}  // namespace

nlohmann::json describe(const FieldTower& t) {
  nlohmann::json j;
  j["p"] = t.params.p;
  j["m"] = t.params.m;
  j["m1"] = t.params.m1;
  j["m2"] = t.params.m2;
  j["q"] = t.q();
  // a degree-1 level is F_q itself and has no modulus of its own
  auto relative = [&](const FieldPtr& f) { return f == t.fq ? nlohmann::json::array() : modulus_record(*f); };
  j["moduli"] = {{"Fq/Fp", modulus_record(*t.fq)}, {"Fq1/Fq", relative(t.f1)}, {"Fq2/Fq", relative(t.f2)}};
  j["primitive"] = {{"Fq", elem_record(*t.fq, t.fq->primitive())},
                    {"Fq1", elem_record(*t.f1, t.f1->primitive())},
                    {"Fq2", elem_record(*t.f2, t.f2->primitive())}};
  return j;
}

Elem rel_trace(const Elem& x, const FieldPtr& target) {
  if (!target) throw ParameterError("trace target missing");
  return {target, x.field()->trace_to(*target, x.index())};
}

int quad_char(const Elem& x) { return x.field()->quad_char(x.index()); }

Elem primitive_element(const FieldPtr& field) { return {field, field->primitive()}; }

std::vector<Elem> enumerate(const FieldPtr& field) {
  std::vector<Elem> out;
  out.reserve(field->size());
  for (Index w : field->ordering()) out.emplace_back(field, w);
  return out;
}

}  // namespace qfcodes
