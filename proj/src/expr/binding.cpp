#include "riesz/expr/binding.hpp"

#include "riesz/pwfun/literal.hpp"

namespace riesz::expr {

using nlohmann::json;

Rational json_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw BindingError(std::string("bad rational: ") + e.what());
    }
  }
  throw BindingError("expected a rational, got " + j.dump());
}

json rational_json(const Rational& r) { return r.str(); }

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw BindingError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::pair<Rational, Rational> domain_of(const json& j) {
  if (!j.is_array() || j.size() != 2) throw BindingError("domain must be [a, b]");
  return {json_rational(j[0]), json_rational(j[1])};
}

pw::PiecewiseFunction pw_literal(const std::string& text, const std::optional<std::pair<Rational, Rational>>& dom) {
  if (text.starts_with("poly")) {
    if (!dom) throw BindingError("a poly[...] generator needs a domain");
    return pw::PiecewiseFunction::polynomial(dom->first, dom->second, num::Polynomial::parse(text));
  }
  auto f = pw::parse_pw(text);
  if (dom && (f.domain_lo() != dom->first || f.domain_hi() != dom->second)) {
    throw BindingError("carrier mismatch: literal domain differs from model domain");
  }
  return f;
}

VectorModel load_vector(const json& j) {
  const json& gens = field(j, "generators");
  if (!gens.is_object()) throw BindingError("generators must be an object");
  std::optional<std::size_t> dim;
  if (j.contains("dim")) dim = j.at("dim").get<std::size_t>();
  if (!dim) {
    if (gens.empty()) throw BindingError("vector model needs dim or a generator");
    dim = gens.begin()->size();
  }
  VectorModel m(*dim);
  for (const auto& [name, arr] : gens.items()) {
    if (!arr.is_array()) throw BindingError("vector generator " + name + " must be an array");
    QVector v;
    for (const auto& c : arr) v.push_back(json_rational(c));
    m.bind(name, std::move(v));
  }
  return m;
}

PwModel load_pw(const json& j, const pw::Budget& budget) {
  const json& gens = field(j, "generators");
  if (!gens.is_object()) throw BindingError("generators must be an object");
  std::optional<std::pair<Rational, Rational>> dom;
  if (j.contains("domain")) dom = domain_of(j.at("domain"));
  std::vector<std::pair<std::string, pw::PiecewiseFunction>> fs;
  for (const auto& [name, lit] : gens.items()) {
    if (!lit.is_string()) throw BindingError("pw generator " + name + " must be a string literal");
    auto f = pw_literal(lit.get<std::string>(), dom);
    if (!dom) dom = std::make_pair(f.domain_lo(), f.domain_hi());
    fs.emplace_back(name, std::move(f));
  }
  if (!dom) throw BindingError("pw model needs a domain or a generator");
  PwModel m(dom->first, dom->second, budget);
  for (auto& [name, f] : fs) m.bind(name, std::move(f));
  return m;
}

tensor::SeparableTensor tensor_term(const json& j) {
  if (!j.is_object()) throw BindingError("tensor term must be {x, y}");
  auto f = pw_literal(field(j, "x").get<std::string>(), std::nullopt);
  auto g = pw_literal(field(j, "y").get<std::string>(), std::nullopt);
  return tensor::SeparableTensor::simple(std::move(f), std::move(g));
}

}  // namespace

tensor::TensorBinding load_tensor_binding(const json& gens) {
  if (!gens.is_object()) throw BindingError("generators must be an object");
  tensor::TensorBinding b;
  for (const auto& [name, val] : gens.items()) {
    std::optional<tensor::SeparableTensor> t;
    if (val.is_array()) {
      if (val.empty()) throw BindingError("tensor generator " + name + " has no terms");
      for (const auto& term : val) {
        auto s = tensor_term(term);
        t = t ? tensor::tensor_add(*t, s) : s;
      }
    } else {
      t = tensor_term(val);
    }
    if (!b.generators.empty() && !b.any().same_domains(*t)) {
      throw BindingError("carrier mismatch: tensor generator " + name + " has different domains");
    }
    b.generators.emplace(name, std::move(*t));
  }
  return b;
}

tensor::GridSpec load_grid_spec(const json& j, const tensor::TensorBinding* defaults) {
  tensor::GridSpec s;
  if (defaults && !defaults->generators.empty()) {
    const auto& t = defaults->any();
    s.x0 = t.x_lo();
    s.x1 = t.x_hi();
    s.y0 = t.y_lo();
    s.y1 = t.y_hi();
  }
  if (j.is_null()) return s;
  if (j.contains("nx")) s.nx = j.at("nx").get<std::size_t>();
  if (j.contains("ny")) s.ny = j.at("ny").get<std::size_t>();
  if (j.contains("xdomain")) std::tie(s.x0, s.x1) = domain_of(j.at("xdomain"));
  if (j.contains("ydomain")) std::tie(s.y0, s.y1) = domain_of(j.at("ydomain"));
  return s;
}

ModelBinding load_binding(const json& j, const pw::Budget& budget) {
  try {
    std::string kind = field(j, "model").get<std::string>();
    if (kind == "vector") return load_vector(j);
    if (kind == "pw") return load_pw(j, budget);
    if (kind == "tensor") {
      auto tb = load_tensor_binding(field(j, "generators"));
      return tb.grid_model(load_grid_spec(j.value("grid", json()), &tb));
    }
    throw BindingError("unknown model kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw BindingError(std::string("malformed binding: ") + e.what());
  } catch (const DomainError& e) {
    throw BindingError(e.what());
  }
}

std::string model_kind(const ModelBinding& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VectorModel>) return "vector";
        else if constexpr (std::is_same_v<T, PwModel>) return "pw";
        else return "grid";
      },
      m);
}

}  // namespace riesz::expr
