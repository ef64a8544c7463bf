#include "virasoro/json_io.hpp"

#include "virasoro/errors.hpp"

#include <algorithm>

namespace virasoro {

namespace {

int parse_int_key(const std::string& key) {
  try {
    return std::stoi(key);
  } catch (const std::exception&) {
    throw InvalidInput("malformed integer key: " + key);
  }
}

}  // namespace

Json to_json(const Rational& value) {
  return rational_to_string(value);
}

Json to_json(const CentralScalar& value) {
  Json out = Json::object();
  for (const auto& [degree, coeff] : value.coefficients()) {
    out[std::to_string(degree)] = rational_to_string(coeff);
  }
  return out;
}

Json to_json(const LaurentPoly& value) {
  Json out;
  out["variable"] = std::string(1, var_name(value.variable()));
  Json coeffs = Json::object();
  for (const auto& [exponent, coeff] : value.coefficients()) {
    coeffs[std::to_string(exponent)] = to_json(coeff);
  }
  out["coefficients"] = coeffs;
  return out;
}

Json to_json(const BiSeries& value) {
  Json out;
  out["window"] = value.window().bound();
  Json cells = Json::array();
  for (const auto& [key, coeff] : value.coefficients()) {
    Json cell;
    cell["z"] = key.first;
    cell["w"] = key.second;
    cell["value"] = to_json(coeff);
    cells.push_back(cell);
  }
  out["coefficients"] = cells;
  return out;
}

Json to_json(const DeltaExpansion& value) {
  Json terms = Json::object();
  for (const auto& [j, coeff] : value.terms()) {
    terms[std::to_string(j)] = to_json(coeff);
  }
  Json out;
  out["terms"] = terms;
  return out;
}

Json to_json(const ModeElement& value) {
  Json out;
  Json modes = Json::array();
  for (const auto& [key, coeff] : value.modes()) {
    Json mode;
    mode["symbol"] = key.first.name;
    mode["index"] = key.second;
    mode["value"] = to_json(coeff);
    modes.push_back(mode);
  }
  out["modes"] = modes;
  out["central"] = to_json(value.central());
  return out;
}

Json to_json(const VirasoroElement& value) {
  Json out;
  Json modes = Json::object();
  for (const auto& [n, coeff] : value.witt().modes()) {
    modes[std::to_string(n)] = to_json(coeff);
  }
  out["modes"] = modes;
  out["central"] = to_json(value.central());
  return out;
}

Json to_json(const OpeData& value) {
  Json out;
  Json fields = Json::array();
  auto push_field = [&fields](const FieldSymbol& symbol) {
    for (const auto& existing : fields) {
      if (existing["name"] == symbol.name) {
        return;
      }
    }
    Json f;
    f["name"] = symbol.name;
    f["weight"] = symbol.weight;
    fields.push_back(f);
  };
  push_field(value.left());
  push_field(value.right());
  for (const auto& [j, coeff] : value.singular()) {
    for (const auto& term : coeff.terms()) {
      if (term.symbol.has_value()) {
        push_field(*term.symbol);
      }
    }
  }
  out["fields"] = fields;
  out["left"] = value.left().name;
  out["right"] = value.right().name;
  Json singular = Json::object();
  for (const auto& [j, coeff] : value.singular()) {
    Json terms = Json::array();
    for (const auto& term : coeff.terms()) {
      Json t;
      t["scalar"] = to_json(term.scalar);
      t["derivative_order"] = term.derivative_order;
      t["symbol"] = term.symbol.has_value() ? term.symbol->name : "CONST";
      t["w_exponent"] = term.w_exponent;
      terms.push_back(t);
    }
    singular[std::to_string(j)] = terms;
  }
  out["singular"] = singular;
  return out;
}

Json to_json(const ExchangeReport& value) {
  Json out;
  out["order"] = value.order();
  out["exponent_window"] = value.exponent_window();
  Json fixed = Json::object();
  for (const auto& [slot, poly] : value.fixed_slots()) {
    fixed[std::to_string(slot)] = to_json(poly);
  }
  out["fixed"] = fixed;
  out["unknown_system_consistent"] = value.unknown_system_consistent();
  out["satisfiable"] = value.satisfiable();
  Json violations = Json::array();
  for (const auto& violation : value.violations()) {
    Json v;
    v["constraint_order"] = violation.constraint_order;
    v["exponent"] = violation.exponent;
    v["residual"] = to_json(violation.residual);
    violations.push_back(v);
  }
  out["violations"] = violations;
  Json relations = Json::array();
  for (const int slot : value.unknown_slots()) {
    for (int e = -value.exponent_window(); e <= value.exponent_window(); ++e) {
      const auto relation = value.relation(slot, e);
      if (!relation.has_value()) {
        continue;
      }
      Json r;
      r["slot"] = slot;
      r["exponent"] = e;
      Json deps = Json::array();
      for (const auto& [unknown, coeff] : relation->dependencies) {
        Json d;
        d["slot"] = unknown.first;
        d["exponent"] = unknown.second;
        d["coefficient"] = to_json(coeff);
        deps.push_back(d);
      }
      r["dependencies"] = deps;
      r["constant"] = to_json(relation->constant);
      relations.push_back(r);
    }
  }
  out["determined"] = relations;
  out["summary"] = value.summary();
  return out;
}

Json to_json(const CocycleSolveReport& value) {
  Json out;
  out["window"] = value.window;
  out["solution_dimension"] = value.solution_dimension;
  Json basis = Json::array();
  for (const auto& vec : value.basis) {
    Json entry = Json::object();
    for (const auto& [m, coeff] : vec) {
      entry[std::to_string(m)] = to_json(coeff);
    }
    basis.push_back(entry);
  }
  out["basis"] = basis;
  out["coboundary_dimension"] = value.coboundary_dimension;
  out["quotient_dimension"] = value.quotient_dimension;
  Json representative = Json::object();
  for (const auto& [m, coeff] : value.normalized_representative) {
    representative[std::to_string(m)] = to_json(coeff);
  }
  out["normalized_representative"] = representative;
  return out;
}

CentralScalar scalar_from_json(const Json& value) {
  CentralScalar result;
  if (!value.is_object()) {
    throw InvalidInput("scalar must be a degree -> rational object");
  }
  for (const auto& [key, entry] : value.items()) {
    const int degree = parse_int_key(key);
    if (degree < 0) {
      throw InvalidInput("negative degree in a scalar");
    }
    result += CentralScalar::c(degree).scaled(
        rational_from_string(entry.get<std::string>()));
  }
  return result;
}

LaurentPoly laurent_from_json(const Json& value) {
  const std::string variable = value.at("variable").get<std::string>();
  Var var = Var::u;
  if (variable == "z") {
    var = Var::z;
  } else if (variable == "w") {
    var = Var::w;
  } else if (variable != "u") {
    throw InvalidInput("unknown variable tag: " + variable);
  }
  LaurentPoly result(var);
  for (const auto& [key, entry] : value.at("coefficients").items()) {
    result.add_term(parse_int_key(key), scalar_from_json(entry));
  }
  return result;
}

DeltaExpansion delta_expansion_from_json(const Json& value) {
  DeltaExpansion result;
  for (const auto& [key, entry] : value.at("terms").items()) {
    result.set_term(parse_int_key(key), laurent_from_json(entry));
  }
  return result;
}

OpeData ope_from_json(const Json& value) {
  std::map<std::string, FieldSymbol> declared;
  for (const auto& field : value.at("fields")) {
    const std::string name = field.at("name").get<std::string>();
    if (name == "CONST") {
      throw InvalidInput("CONST is reserved");
    }
    declared[name] = FieldSymbol{name, field.at("weight").get<int>()};
  }
  auto lookup = [&declared](const std::string& name) {
    const auto it = declared.find(name);
    if (it == declared.end()) {
      throw InvalidInput("undeclared field: " + name);
    }
    return it->second;
  };
  const FieldSymbol left = lookup(value.at("left").get<std::string>());
  const FieldSymbol right = lookup(value.at("right").get<std::string>());
  std::map<int, FieldPolynomial> singular;
  for (const auto& [key, terms] : value.at("singular").items()) {
    const int j = parse_int_key(key);
    FieldPolynomial coeff;
    for (const auto& term : terms) {
      const CentralScalar scalar = scalar_from_json(term.at("scalar"));
      const int order = term.at("derivative_order").get<int>();
      const int exponent = term.at("w_exponent").get<int>();
      const std::string symbol = term.at("symbol").get<std::string>();
      if (symbol == "CONST") {
        if (order != 0) {
          throw InvalidInput("CONST terms carry derivative order zero");
        }
        coeff += FieldPolynomial::constant(scalar, exponent);
      } else {
        coeff += FieldPolynomial::of(lookup(symbol), order, exponent, scalar);
      }
    }
    singular.emplace(j, std::move(coeff));
  }
  return OpeData(left, right, std::move(singular));
}

}  // namespace virasoro
