#pragma once

#include <string>
#include <vector>

#include "adinkra/graph.hpp"

namespace adinkra {

struct GaussianInt {
  long long re = 0;
  long long im = 0;

  static GaussianInt one() { return {1, 0}; }
  static GaussianInt imaginary() { return {0, 1}; }

  GaussianInt operator*(const GaussianInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianInt operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;

  std::string str() const;
};

struct FieldRef {
  Parity kind = Parity::boson;
  int vertex = 0;

  friend bool operator==(const FieldRef&, const FieldRef&) = default;
  std::string str() const;  // "b7" / "f3"
};

// coefficient * (d/dt)^order * field
struct FieldTerm {
  GaussianInt coeff;
  int deriv_order = 0;
  FieldRef field;

  friend bool operator==(const FieldTerm&, const FieldTerm&) = default;
  FieldTerm operator-() const { return {-coeff, deriv_order, field}; }
};

// Q_k(field) for every color k and field; each image is a single term.
class SupermultipletRules {
public:
  SupermultipletRules(int colors, int n);

  int color_count() const { return colors_; }
  int vertex_count() const { return n_; }

  void set(int color, const FieldRef& field, FieldTerm image);
  const FieldTerm& rule(int color, const FieldRef& field) const;
  FieldRef field_of(int vertex) const;

  // Push Q_color through a term: scalars and d/dt commute with Q.
  FieldTerm apply(int color, const FieldTerm& term) const;

private:
  int colors_ = 0;
  int n_ = 0;
  std::vector<FieldTerm> table_;  // [color-1][vertex-1]
  std::vector<Parity> kind_;     // field species per vertex
};

// Transformation laws of a dashed, height-graded Adinkra.  For an edge
// {b, f} of color k with sign s:
//   boson below:  Q_k(f) = s i (d/dt) b,   Q_k(b) = s f
//   boson above:  Q_k(f) = s i b,          Q_k(b) = s (d/dt) f
// The boson-side images are forced by Q_k^2 = i d/dt.  Passing
// require_totally_odd = false skips the dashing check so that broken
// dashings can be fed to verify_algebra.
SupermultipletRules emit_rules(const ColoredGraph& g,
                               bool require_totally_odd = true);

struct AlgebraFailure {
  int color_i = 0;
  int color_j = 0;  // equals color_i for a square failure
  FieldRef field;
  std::string detail;
};

struct AlgebraReport {
  int checks = 0;
  std::vector<AlgebraFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Q_k(Q_k(x)) = i (d/dt) x for every color and field, and
// Q_i(Q_j(x)) = -Q_j(Q_i(x)) for every pair i != j.
AlgebraReport verify_algebra(const SupermultipletRules& rules);

enum class RuleFormat { text, latex };

// Deterministic listing: by color, fermions before bosons, ascending vertex.
// color 0 means all colors.
std::string render(const SupermultipletRules& rules, RuleFormat format,
                   int color = 0);

}  // namespace adinkra
