#include "numdec/fitter.hpp"

#include <cassert>
#include <limits>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace numdec {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace

std::int64_t AffineEquation::evaluate(std::span<const std::int64_t> args) const {
  if (args.size() != coefficients.size()) {
    throw std::invalid_argument("AffineEquation::evaluate: arity mismatch");
  }
  BigInt acc = constant;
  for (std::size_t i = 0; i < args.size(); ++i) {
    acc += BigInt(coefficients[i]) * args[i];
  }
  if (acc < std::numeric_limits<std::int64_t>::min() ||
      acc > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("AffineEquation::evaluate: result exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(acc);
}

std::string_view to_string(FitStatus status) {
  switch (status) {
    case FitStatus::Exact: return "exact";
    case FitStatus::Inconsistent: return "inconsistent";
    case FitStatus::NonIntegerOnly: return "noninteger";
    case FitStatus::Conflict: return "conflict";
  }
  return "exact";
}

bool verify(const AffineEquation& equation, std::span<const Sample> samples) {
  for (const Sample& s : samples) {
    if (s.args.size() != equation.coefficients.size()) return false;
    BigInt acc = equation.constant;
    for (std::size_t i = 0; i < s.args.size(); ++i) {
      acc += BigInt(equation.coefficients[i]) * s.args[i];
    }
    if (acc != s.value) return false;
  }
  return true;
}

FitOutcome fit_affine(std::span<const Sample> samples, std::size_t arity) {
  if (samples.empty()) throw std::invalid_argument("fit_affine: empty sample set");
  for (const Sample& s : samples) {
    if (s.args.size() != arity) throw std::invalid_argument("fit_affine: arity mismatch");
  }

  // A sample set that is not a function cannot be fitted at all; report it
  // apart from genuine non-linearity. Deduplicating through a map also makes
  // the elimination below independent of sample order.
  std::map<std::vector<std::int64_t>, std::int64_t> unique;
  for (const Sample& s : samples) {
    const auto [it, inserted] = unique.try_emplace(s.args, s.value);
    if (!inserted && it->second != s.value) return FitOutcome{FitStatus::Conflict, std::nullopt};
  }

  const std::size_t cols = arity + 1;  // unknowns: constant, then one per slot
  std::vector<std::vector<Rational>> rows;
  rows.reserve(unique.size());
  for (const auto& [args, value] : unique) {
    std::vector<Rational> row(cols + 1);
    row[0] = 1;
    for (std::size_t i = 0; i < arity; ++i) row[1 + i] = args[i];
    row[cols] = value;
    rows.push_back(std::move(row));
  }

  // Rational Gauss elimination, pivoting columns left to right so that the
  // constant term is the first pivot candidate.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;  // free column
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c <= cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][cols] != 0) return FitOutcome{FitStatus::Inconsistent, std::nullopt};
  }

  // Back substitution with free coefficients pinned to 0.
  std::vector<Rational> solution(cols, 0);
  for (std::size_t i = pivot_cols.size(); i-- > 0;) {
    const std::size_t col = pivot_cols[i];
    Rational rhs = rows[i][cols];
    for (std::size_t c = col + 1; c < cols; ++c) rhs -= rows[i][c] * solution[c];
    solution[col] = rhs / rows[i][col];
  }

  for (const Rational& value : solution) {
    if (boost::multiprecision::denominator(value) != 1) {
      return FitOutcome{FitStatus::NonIntegerOnly, std::nullopt};
    }
  }

  const auto to_int64 = [](const Rational& value) {
    const BigInt n = boost::multiprecision::numerator(value);
    if (n < std::numeric_limits<std::int64_t>::min() ||
        n > std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("fit_affine: coefficient exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(n);
  };
  AffineEquation equation;
  equation.constant = to_int64(solution[0]);
  equation.coefficients.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) equation.coefficients.push_back(to_int64(solution[1 + i]));
  assert(verify(equation, samples));
  return FitOutcome{FitStatus::Exact, std::move(equation)};
}

}  // namespace numdec
