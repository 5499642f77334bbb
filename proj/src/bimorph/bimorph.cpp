#include "riesz/bimorph/bimorph.hpp"

#include "riesz/errors.hpp"

namespace riesz::bimorph {

using nlohmann::json;

namespace {

Rational dot(const QVector& a, const QVector& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector abs_vec(QVector v) {
  for (auto& x : v) x = x.abs();
  return v;
}

QVector add_vec(QVector a, const QVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

QVector scale_vec(const Rational& c, QVector a) {
  for (auto& x : a) x *= c;
  return a;
}

QVector hadamard(QVector a, const QVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return a;
}

QVector random_vec(std::size_t d, Rng& rng, long num = 20, long den = 6) {
  QVector v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(rng.rational(num, den));
  return v;
}

json vec_json(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json dims_of(const AtomBimorphism& t) { return {{"m", t.m}, {"n", t.n}, {"k", t.k()}}; }

}  // namespace

BilinearForm BilinearForm::zero(std::size_t m, std::size_t n) {
  return {closure::Matrix(m, closure::Row(n, Rational(0)))};
}

BilinearForm BilinearForm::identity(std::size_t n) {
  BilinearForm f = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) f.entries[i][i] = Rational(1);
  return f;
}

Rational BilinearForm::apply(const QVector& x, const QVector& y) const {
  if (x.size() != rows() || y.size() != cols()) throw DomainError("bilinear form: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols(); ++j) s += x[i] * entries[i][j] * y[j];
  }
  return s;
}

bool BilinearForm::is_zero() const {
  for (const auto& r : entries) {
    for (const auto& e : r) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

bool BilinearForm::is_positive() const {
  for (const auto& r : entries) {
    for (const auto& e : r) {
      if (e.sign() < 0) return false;
    }
  }
  return true;
}

AtomBimorphism AtomBimorphism::single_atoms(std::size_t m, std::size_t n, const std::vector<Atom>& atoms) {
  AtomBimorphism t{m, n, {}};
  for (const auto& a : atoms) {
    if (a.i >= m || a.j >= n) throw DomainError("atom index out of range");
    t.coords.push_back({a});
  }
  return t;
}

QVector AtomBimorphism::apply(const QVector& x, const QVector& y) const {
  if (x.size() != m || y.size() != n) throw DomainError("bimorphism: dimension mismatch");
  QVector out;
  out.reserve(coords.size());
  for (const auto& atoms : coords) {
    Rational s(0);
    for (const auto& a : atoms) s += a.c * x[a.i] * y[a.j];
    out.push_back(std::move(s));
  }
  return out;
}

bool AtomBimorphism::is_positive() const {
  for (const auto& atoms : coords) {
    for (const auto& a : atoms) {
      if (a.c.sign() < 0) return false;
    }
  }
  return true;
}

bool AtomBimorphism::preserves_unit() const {
  for (const auto& atoms : coords) {
    Rational s(0);
    for (const auto& a : atoms) s += a.c;
    if (s != Rational(1)) return false;
  }
  return true;
}

json LabResult::to_json() const {
  json j = {{"check", check}, {"dims", dims}, {"seed", seed}, {"trials", trials}, {"result", result}};
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

Proportionality proportionality(const BilinearForm& phi, const BilinearForm& psi, std::uint64_t seed,
                                std::size_t attempts) {
  if (phi.rows() != psi.rows() || phi.cols() != psi.cols()) throw DomainError("proportionality: dimension mismatch");
  const std::size_t m = phi.rows();
  const std::size_t n = phi.cols();
  Proportionality out;
  if (phi.is_zero()) {
    if (psi.is_zero()) {
      out.kind = Proportionality::Kind::Lambda;
      out.lambda = Rational(0);
      return out;
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (psi.entries[i][j].is_zero()) continue;
        out.kind = Proportionality::Kind::Witness;
        out.x.assign(m, Rational(0));
        out.y.assign(n, Rational(0));
        out.x[i] = Rational(1);
        out.y[j] = Rational(1);
        out.log.push_back("phi = 0, psi != 0: unit vectors at a nonzero psi entry");
        return out;
      }
    }
  }
  Rational lambda;
  bool found = false;
  for (std::size_t i = 0; i < m && !found; ++i) {
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (!phi.entries[i][j].is_zero()) {
        lambda = psi.entries[i][j] / phi.entries[i][j];
        found = true;
      }
    }
  }
  bool proportional = true;
  for (std::size_t i = 0; i < m && proportional; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (psi.entries[i][j] != lambda * phi.entries[i][j]) {
        proportional = false;
        break;
      }
    }
  }
  if (proportional) {
    out.kind = Proportionality::Kind::Lambda;
    out.lambda = lambda;
    return out;
  }
  // x fixed: a = Phi^T x, b = Psi^T x; y = b - (b.a / a.a) a is orthogonal to a,
  // and b.y > 0 unless b is parallel to a. Alternate with the roles of x, y
  // swapped, since a rank-one Phi can make one side always parallel.
  Rng rng = Rng::stream(seed, "proportionality");
  for (std::size_t t = 0; t < attempts; ++t) {
    bool fix_x = t % 2 == 0;
    QVector r = random_vec(fix_x ? m : n, rng, 9, 3);
    QVector a(fix_x ? n : m, Rational(0));
    QVector b(fix_x ? n : m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (fix_x) {
          a[j] += r[i] * phi.entries[i][j];
          b[j] += r[i] * psi.entries[i][j];
        } else {
          a[i] += phi.entries[i][j] * r[j];
          b[i] += psi.entries[i][j] * r[j];
        }
      }
    }
    QVector s = b;
    Rational aa = dot(a, a);
    if (!aa.is_zero()) s = add_vec(b, scale_vec(-(dot(b, a) / aa), a));
    QVector x = fix_x ? r : s;
    QVector y = fix_x ? s : r;
    if (phi.apply(x, y).is_zero() && !psi.apply(x, y).is_zero()) {
      out.kind = Proportionality::Kind::Witness;
      out.x = std::move(x);
      out.y = std::move(y);
      out.log.push_back("attempt " + std::to_string(t) + ": witness found");
      return out;
    }
    out.log.push_back("attempt " + std::to_string(t) + ": psi parallel to phi along the sample");
  }
  out.kind = Proportionality::Kind::Inconclusive;
  return out;
}

LabResult check_bimorphism(const AtomBimorphism& t, std::size_t trials, std::uint64_t seed) {
  LabResult r{"bimorphism", dims_of(t), seed, trials, true, json()};
  Rng rng = Rng::stream(seed, "bimorphism");
  for (std::size_t s = 0; s < trials; ++s) {
    QVector x = random_vec(t.m, rng);
    QVector x2 = random_vec(t.m, rng);
    QVector y = random_vec(t.n, rng);
    QVector y2 = random_vec(t.n, rng);
    Rational c = rng.nonneg_rational(20, 6);
    QVector txy = t.apply(x, y);
    const char* law = nullptr;
    if (t.apply(abs_vec(x), abs_vec(y)) != abs_vec(txy)) law = "|T(x,y)| = T(|x|,|y|)";
    else if (t.apply(add_vec(x, x2), y) != add_vec(txy, t.apply(x2, y))) law = "additive in x";
    else if (t.apply(x, add_vec(y, y2)) != add_vec(txy, t.apply(x, y2))) law = "additive in y";
    else if (t.apply(scale_vec(c, x), y) != scale_vec(c, txy)) law = "homogeneous in x";
    else if (t.apply(x, scale_vec(c, y)) != scale_vec(c, txy)) law = "homogeneous in y";
    if (law) {
      r.result = false;
      r.witness = {{"law", law}, {"x", vec_json(x)}, {"y", vec_json(y)}, {"trial", s}};
      return r;
    }
  }
  return r;
}

LabResult check_multiplicative(const AtomBimorphism& t, std::size_t trials, std::uint64_t seed) {
  if (!t.preserves_unit()) throw HypothesisError("hypothesis failure: T(e, e) != e");
  LabResult r{"multiplicative", dims_of(t), seed, trials, true, json()};
  Rng rng = Rng::stream(seed, "multiplicative");
  for (std::size_t s = 0; s < trials; ++s) {
    QVector a = random_vec(t.m, rng);
    QVector x = random_vec(t.m, rng);
    QVector b = random_vec(t.n, rng);
    QVector y = random_vec(t.n, rng);
    if (t.apply(hadamard(a, x), hadamard(b, y)) != hadamard(t.apply(a, b), t.apply(x, y))) {
      r.result = false;
      r.witness = {{"a", vec_json(a)}, {"x", vec_json(x)}, {"b", vec_json(b)}, {"y", vec_json(y)}};
      return r;
    }
  }
  return r;
}

namespace {

std::vector<QVector> lattice_vectors(std::size_t d, const std::vector<Rational>& values) {
  std::vector<QVector> out{QVector{}};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<QVector> next;
    for (const auto& v : out) {
      for (const auto& c : values) {
        QVector w = v;
        w.push_back(c);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

LabResult exhaustive_multiplicative(std::size_t max_dim) {
  LabResult r{"multiplicative-exhaustive", {{"max_dim", max_dim}}, 0, 0, true, json()};
  std::size_t cases = 0;
  for (std::size_t m = 1; m <= max_dim; ++m) {
    for (std::size_t n = 1; n <= max_dim; ++n) {
      std::vector<Rational> values = m * n <= 4 ? std::vector<Rational>{Rational(-1), Rational(1, 2), Rational(2)}
                                                : std::vector<Rational>{Rational(-1), Rational(2)};
      auto xs = lattice_vectors(m, values);
      auto ys = lattice_vectors(n, values);
      for (std::size_t k = 1; k <= max_dim; ++k) {
        std::size_t maps = 1;
        for (std::size_t i = 0; i < k; ++i) maps *= m * n;
        for (std::size_t code = 0; code < maps; ++code) {
          std::vector<Atom> atoms;
          std::size_t c = code;
          for (std::size_t i = 0; i < k; ++i) {
            std::size_t cell = c % (m * n);
            c /= m * n;
            atoms.push_back({cell / n, cell % n, Rational(1)});
          }
          AtomBimorphism t = AtomBimorphism::single_atoms(m, n, atoms);
          for (const auto& a : xs) {
            for (const auto& x : xs) {
              QVector ax = hadamard(a, x);
              for (const auto& b : ys) {
                QVector tab = t.apply(a, b);
                for (const auto& y : ys) {
                  ++cases;
                  if (t.apply(ax, hadamard(b, y)) != hadamard(tab, t.apply(x, y))) {
                    r.result = false;
                    r.trials = cases;
                    r.witness = {{"m", m}, {"n", n}, {"k", k}, {"a", vec_json(a)}, {"x", vec_json(x)},
                                 {"b", vec_json(b)}, {"y", vec_json(y)}};
                    return r;
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  r.trials = cases;
  return r;
}

namespace {

template <class Apply>
LabResult convergence_impl(const char* name, Apply phi, const ConvergencePair& p, std::size_t n_max, json dims) {
  for (const auto* v : {&p.u, &p.v}) {
    for (const auto& c : *v) {
      if (c.sign() < 0) throw DomainError("regulators must be nonnegative");
    }
  }
  QVector w = add_vec(abs_vec(p.g), p.v);
  QVector base = phi(p.f, p.g);
  QVector bound = add_vec(phi(p.u, w), phi(abs_vec(p.f), p.v));
  LabResult r{name, std::move(dims), 0, n_max, true, json()};
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational inv(1, static_cast<long>(n));
    QVector fn = add_vec(p.f, scale_vec(inv, p.u));
    QVector gn = add_vec(p.g, scale_vec(inv, p.v));
    QVector diff = abs_vec(add_vec(phi(fn, gn), scale_vec(Rational(-1), base)));
    QVector rhs = scale_vec(inv, bound);
    bool gn_ok = true;
    for (std::size_t i = 0; i < gn.size(); ++i) gn_ok = gn_ok && gn[i].abs() <= w[i];
    for (std::size_t i = 0; i < diff.size(); ++i) {
      if (!gn_ok || diff[i] > rhs[i]) {
        r.result = false;
        r.witness = {{"n", n}, {"coord", i}, {"lhs", diff[i].str()}, {"rhs", rhs[i].str()}, {"gn_bounded", gn_ok}};
        return r;
      }
    }
  }
  return r;
}

}  // namespace

LabResult convergence_bound_check(const AtomBimorphism& phi, const ConvergencePair& pair, std::size_t n_max) {
  if (!phi.is_positive()) throw DomainError("phi is not positive");
  return convergence_impl(
      "convergence", [&](const QVector& x, const QVector& y) { return phi.apply(x, y); }, pair, n_max, dims_of(phi));
}

LabResult convergence_bound_check(const BilinearForm& phi, const ConvergencePair& pair, std::size_t n_max) {
  if (!phi.is_positive()) throw DomainError("phi is not positive");
  return convergence_impl(
      "convergence", [&](const QVector& x, const QVector& y) { return QVector{phi.apply(x, y)}; }, pair, n_max,
      {{"m", phi.rows()}, {"n", phi.cols()}, {"k", 1}});
}

AtomBimorphism random_atoms(std::size_t m, std::size_t n, std::size_t k, bool unit_preserving, Rng& rng) {
  std::vector<Atom> atoms;
  for (std::size_t r = 0; r < k; ++r) {
    Atom a{static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 1)),
           static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1)),
           unit_preserving ? Rational(1) : rng.nonneg_rational(10, 4)};
    atoms.push_back(a);
  }
  return AtomBimorphism::single_atoms(m, n, atoms);
}

}  // namespace riesz::bimorph
