#include "virasoro/exchange.hpp"

#include "virasoro/errors.hpp"
#include "virasoro/linsolve.hpp"

#include <algorithm>

namespace virasoro {

std::optional<ExchangeRelation> ExchangeReport::relation(int slot, int exponent) const {
  const auto it = determined_.find({slot, exponent});
  if (it == determined_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool ExchangeReport::is_free(int slot, int exponent) const {
  return free_.contains({slot, exponent});
}

std::set<int> ExchangeReport::undetermined_exponents(int slot) const {
  std::set<int> result;
  if (slot_is_free(slot)) {
    return result;  // freedom of the whole slot is not a window artifact
  }
  for (const auto& unknown : unmentioned_) {
    if (unknown.first == slot) {
      result.insert(unknown.second);
    }
  }
  return result;
}

bool ExchangeReport::slot_is_free(int slot) const {
  for (int e = -window_; e <= window_; ++e) {
    if (!is_free(slot, e)) {
      return false;
    }
  }
  return true;
}

bool ExchangeReport::slot_is_zero(int slot) const {
  for (int e = -window_; e <= window_; ++e) {
    const auto rel = relation(slot, e);
    if (!rel.has_value() || !rel->is_zero()) {
      return false;
    }
  }
  return true;
}

std::optional<Rational> ExchangeReport::proportional_derivative(
    int target_slot, int source_slot, int derivative_order) const {
  std::optional<Rational> factor;
  for (int e = -window_; e <= window_; ++e) {
    const auto rel = relation(target_slot, e);
    if (!rel.has_value()) {
      continue;  // window-edge unknowns carry no constraint
    }
    if (!rel->constant.is_zero()) {
      return std::nullopt;
    }
    // d^order c_source contributes falling(e + order) ... at exponent e.
    Rational derivative_coeff = 1;
    for (int i = 0; i < derivative_order; ++i) {
      derivative_coeff *= e + derivative_order - i;
    }
    if (derivative_coeff == 0) {
      if (!rel->dependencies.empty()) {
        return std::nullopt;
      }
      continue;
    }
    if (rel->dependencies.size() != 1) {
      return std::nullopt;
    }
    const auto& [unknown, coeff] = *rel->dependencies.begin();
    if (unknown != ExchangeUnknown{source_slot, e + derivative_order}) {
      return std::nullopt;
    }
    const Rational candidate = coeff / derivative_coeff;
    if (factor.has_value() && *factor != candidate) {
      return std::nullopt;
    }
    factor = candidate;
  }
  return factor;
}

namespace {

std::string unknown_name(const ExchangeUnknown& u) {
  return "c" + std::to_string(u.first) + "[" + std::to_string(u.second) + "]";
}

std::string relation_text(const ExchangeUnknown& u, const ExchangeRelation& rel) {
  std::string rhs;
  for (const auto& [dep, coeff] : rel.dependencies) {
    if (!rhs.empty()) {
      rhs += " + ";
    }
    rhs += rational_to_display(coeff) + "*" + unknown_name(dep);
  }
  if (!rel.constant.is_zero()) {
    if (!rhs.empty()) {
      rhs += " + ";
    }
    rhs += rel.constant.to_string();
  }
  if (rhs.empty()) {
    rhs = "0";
  }
  return unknown_name(u) + " = " + rhs;
}

}  // namespace

std::vector<std::string> ExchangeReport::summary() const {
  std::vector<std::string> lines;
  for (const auto& [slot, poly] : fixed_) {
    lines.push_back("c" + std::to_string(slot) + " = " + poly.to_string() +
                    " (fixed)");
  }
  for (const int slot : unknown_slots_) {
    if (slot_is_zero(slot)) {
      lines.push_back("c" + std::to_string(slot) + " = 0");
      continue;
    }
    if (slot_is_free(slot)) {
      lines.push_back("c" + std::to_string(slot) + " free");
      continue;
    }
    bool recognized = false;
    for (const int source : unknown_slots_) {
      if (source == slot || recognized) {
        continue;
      }
      for (int order = 1; order <= order_ && !recognized; ++order) {
        const auto factor = proportional_derivative(slot, source, order);
        if (factor.has_value() && *factor != 0) {
          std::string line = "c" + std::to_string(slot) + " = " +
                             rational_to_display(*factor) + "*d";
          if (order > 1) {
            line += "^" + std::to_string(order);
          }
          line += "c" + std::to_string(source);
          const auto open = undetermined_exponents(slot);
          if (!open.empty()) {
            line += " (top " + std::to_string(open.size()) +
                    " exponents outside the constraint window)";
          }
          lines.push_back(line);
          recognized = true;
        }
      }
    }
    if (!recognized) {
      for (int e = -window_; e <= window_; ++e) {
        const auto rel = relation(slot, e);
        if (rel.has_value() && !rel->is_zero()) {
          lines.push_back(relation_text({slot, e}, *rel));
        }
      }
    }
  }
  for (const auto& violation : violations_) {
    lines.push_back("violated: order " + std::to_string(violation.constraint_order) +
                    ", exponent " + std::to_string(violation.exponent) +
                    ": residual " + violation.residual.to_string());
  }
  if (!consistent_) {
    lines.push_back("unknown system inconsistent");
  }
  return lines;
}

ExchangeReport solve_exchange_constraints(int order,
                                          const std::map<int, LaurentPoly>& fixed,
                                          int exponent_window) {
  if (order < 1) {
    throw InvalidInput("exchange constraints need a positive order");
  }
  if (exponent_window < 1) {
    throw InvalidInput("exchange constraints need a positive exponent window");
  }
  for (const auto& [slot, poly] : fixed) {
    if (slot < 0 || slot >= order) {
      throw InvalidInput("fixed slot outside the singular part");
    }
    if (poly.variable() != Var::w) {
      throw InvalidInput("fixed coefficients live in w");
    }
  }

  ExchangeReport report;
  report.order_ = order;
  report.window_ = exponent_window;
  report.fixed_ = fixed;
  for (int j = 0; j < order; ++j) {
    if (!fixed.contains(j)) {
      report.unknown_slots_.push_back(j);
    }
  }

  // Column layout: unknown slots in ascending (slot, exponent) order.
  std::map<ExchangeUnknown, int> column_of;
  std::vector<ExchangeUnknown> unknown_of;
  for (const int slot : report.unknown_slots_) {
    for (int e = -exponent_window; e <= exponent_window; ++e) {
      column_of.emplace(ExchangeUnknown{slot, e}, static_cast<int>(unknown_of.size()));
      unknown_of.push_back({slot, e});
    }
  }
  const int columns = static_cast<int>(unknown_of.size());

  // Constraint at (k, e): c_k[e] - sum_i sign(k, i) * [d^(i)/i! c_{k+i}][e]
  // with sign(k, i) = (-1)^(k+i+1); the divided derivative reads the source
  // coefficient at exponent e + i scaled by gen_binomial(e + i, i).
  std::vector<LinearRow> rows;
  std::set<ExchangeUnknown> mentioned;
  for (int k = 0; k < order; ++k) {
    for (int e = -exponent_window; e <= exponent_window; ++e) {
      bool in_window = true;
      for (int i = 1; i < order - k; ++i) {
        if (!fixed.contains(k + i) && e + i > exponent_window) {
          in_window = false;
          break;
        }
      }
      if (!in_window) {
        continue;
      }
      LinearRow row;
      row.coeffs.assign(static_cast<std::size_t>(columns), Rational(0));
      auto accumulate = [&](int slot, int exponent, const Rational& scale) {
        if (scale == 0) {
          return;
        }
        const auto fixed_it = fixed.find(slot);
        if (fixed_it != fixed.end()) {
          row.constant += fixed_it->second.coefficient(exponent).scaled(scale);
        } else {
          row.coeffs[static_cast<std::size_t>(column_of.at({slot, exponent}))] += scale;
        }
      };
      accumulate(k, e, Rational(1));
      for (int i = 0; i < order - k; ++i) {
        const Rational sign = (k + i + 1) % 2 == 0 ? Rational(1) : Rational(-1);
        accumulate(k + i, e + i, -sign * gen_binomial(e + i, i));
      }
      bool has_unknown = false;
      for (int c = 0; c < columns; ++c) {
        if (row.coeffs[static_cast<std::size_t>(c)] != 0) {
          has_unknown = true;
          mentioned.insert(unknown_of[static_cast<std::size_t>(c)]);
        }
      }
      if (!has_unknown) {
        if (!row.constant.is_zero()) {
          report.violations_.push_back({k, e, row.constant});
        }
        continue;
      }
      rows.push_back(std::move(row));
    }
  }

  const ReducedSystem reduced = reduce_system(std::move(rows), columns);
  report.consistent_ = reduced.consistent;
  for (int c = 0; c < columns; ++c) {
    const ExchangeUnknown unknown = unknown_of[static_cast<std::size_t>(c)];
    const int row_index = reduced.row_of_column[static_cast<std::size_t>(c)];
    if (row_index < 0) {
      report.free_.insert(unknown);
      ++report.free_count_;
      if (!mentioned.contains(unknown)) {
        report.unmentioned_.insert(unknown);
      }
      continue;
    }
    const LinearRow& row = reduced.rows[static_cast<std::size_t>(row_index)];
    ExchangeRelation relation;
    relation.constant = -row.constant;
    for (int other = 0; other < columns; ++other) {
      if (other == c) {
        continue;
      }
      const Rational coeff = row.coeffs[static_cast<std::size_t>(other)];
      if (coeff != 0) {
        relation.dependencies.emplace(unknown_of[static_cast<std::size_t>(other)],
                                      -coeff);
      }
    }
    report.determined_.emplace(unknown, std::move(relation));
  }
  return report;
}

}  // namespace virasoro
