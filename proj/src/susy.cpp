#include "adinkra/susy.hpp"

#include <sstream>
#include <stdexcept>

#include "adinkra/dashing.hpp"
#include "adinkra/heights.hpp"

namespace adinkra {

std::string GaussianInt::str() const {
  if (im == 0) return std::to_string(re);
  if (re == 0) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return std::to_string(im) + "i";
  }
  std::string out = std::to_string(re);
  out += im > 0 ? "+" : "-";
  long long mag = im > 0 ? im : -im;
  if (mag != 1) out += std::to_string(mag);
  return out + "i";
}

std::string FieldRef::str() const {
  return (kind == Parity::boson ? "b" : "f") + std::to_string(vertex);
}

SupermultipletRules::SupermultipletRules(int colors, int n)
    : colors_(colors),
      n_(n),
      table_(static_cast<std::size_t>(colors) * n),
      kind_(static_cast<std::size_t>(n), Parity::boson) {}

void SupermultipletRules::set(int color, const FieldRef& field, FieldTerm image) {
  kind_[static_cast<std::size_t>(field.vertex - 1)] = field.kind;
  table_[static_cast<std::size_t>(color - 1) * n_ + (field.vertex - 1)] =
      std::move(image);
}

const FieldTerm& SupermultipletRules::rule(int color, const FieldRef& field) const {
  if (color < 1 || color > colors_) throw std::out_of_range("color out of range");
  if (field.vertex < 1 || field.vertex > n_) throw std::out_of_range("field out of range");
  return table_[static_cast<std::size_t>(color - 1) * n_ + (field.vertex - 1)];
}

FieldRef SupermultipletRules::field_of(int vertex) const {
  return FieldRef{kind_[static_cast<std::size_t>(vertex - 1)], vertex};
}

FieldTerm SupermultipletRules::apply(int color, const FieldTerm& term) const {
  const FieldTerm& image = rule(color, term.field);
  return FieldTerm{term.coeff * image.coeff, term.deriv_order + image.deriv_order,
                   image.field};
}

SupermultipletRules emit_rules(const ColoredGraph& g, bool require_totally_odd) {
  if (!g.has_parity()) {
    throw std::invalid_argument("supercharge rules need a parity assignment");
  }
  if (!g.has_heights()) {
    throw std::invalid_argument("supercharge rules need heights");
  }
  if (require_totally_odd && !validate_totally_odd(g).empty()) {
    throw std::invalid_argument("dashing is not totally odd");
  }
  heights_of(g);  // validates level structure

  SupermultipletRules rules(g.color_count(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    int boson = g.parity(e.u) == Parity::boson ? e.u : e.v;
    int fermion = boson == e.u ? e.v : e.u;
    FieldRef b{Parity::boson, boson};
    FieldRef f{Parity::fermion, fermion};
    GaussianInt s{e.sign, 0};
    if (g.height(boson) < g.height(fermion)) {
      rules.set(e.color, f, FieldTerm{s * GaussianInt::imaginary(), 1, b});
      rules.set(e.color, b, FieldTerm{s, 0, f});
    } else {
      rules.set(e.color, f, FieldTerm{s * GaussianInt::imaginary(), 0, b});
      rules.set(e.color, b, FieldTerm{s, 1, f});
    }
  }
  return rules;
}

AlgebraReport verify_algebra(const SupermultipletRules& rules) {
  AlgebraReport report;
  GaussianInt i = GaussianInt::imaginary();
  for (int v = 1; v <= rules.vertex_count(); ++v) {
    FieldTerm start{GaussianInt::one(), 0, rules.field_of(v)};
    for (int k = 1; k <= rules.color_count(); ++k) {
      FieldTerm twice = rules.apply(k, rules.apply(k, start));
      ++report.checks;
      if (twice != (FieldTerm{i, 1, start.field})) {
        report.failures.push_back(
            AlgebraFailure{k, k, start.field,
                           "Q" + std::to_string(k) + "^2 != i d/dt on " +
                               start.field.str()});
      }
    }
    for (int a = 1; a <= rules.color_count(); ++a) {
      for (int b = a + 1; b <= rules.color_count(); ++b) {
        FieldTerm ab = rules.apply(a, rules.apply(b, start));
        FieldTerm ba = rules.apply(b, rules.apply(a, start));
        ++report.checks;
        if (ab != -ba) {
          report.failures.push_back(
              AlgebraFailure{a, b, start.field,
                             "Q" + std::to_string(a) + "Q" + std::to_string(b) +
                                 " != -Q" + std::to_string(b) + "Q" +
                                 std::to_string(a) + " on " + start.field.str()});
        }
      }
    }
  }
  return report;
}

namespace {

std::string render_term_text(const FieldTerm& term) {
  // <sign><coeff> [d/dt[^p]] <field>, coeff in {1, i}
  GaussianInt c = term.coeff;
  bool negative = c.re < 0 || c.im < 0;
  if (negative) c = -c;
  std::string out = negative ? "-" : "+";
  if (c == GaussianInt::one()) {
    out += "1";
  } else if (c == GaussianInt::imaginary()) {
    out += "i";
  } else {
    out += c.str();
  }
  if (term.deriv_order == 1) {
    out += " d/dt";
  } else if (term.deriv_order > 1) {
    out += " d/dt^" + std::to_string(term.deriv_order);
  }
  return out + " " + term.field.str();
}

std::string render_term_latex(const FieldTerm& term) {
  GaussianInt c = term.coeff;
  bool negative = c.re < 0 || c.im < 0;
  if (negative) c = -c;
  std::string out = negative ? "-" : "";
  if (c == GaussianInt::imaginary()) {
    out += "i ";
  } else if (!(c == GaussianInt::one())) {
    out += c.str() + " ";
  }
  if (term.deriv_order == 1) {
    out += "\\frac{d}{dt} ";
  } else if (term.deriv_order > 1) {
    out += "\\left(\\frac{d}{dt}\\right)^{" + std::to_string(term.deriv_order) + "} ";
  }
  out += (term.field.kind == Parity::boson ? "b" : "f");
  out += "_{" + std::to_string(term.field.vertex) + "}";
  return out;
}

}  // namespace

std::string render(const SupermultipletRules& rules, RuleFormat format, int color) {
  if (color < 0 || color > rules.color_count()) {
    throw std::invalid_argument("color out of range");
  }
  std::vector<int> colors;
  if (color == 0) {
    for (int k = 1; k <= rules.color_count(); ++k) colors.push_back(k);
  } else {
    colors.push_back(color);
  }
  std::vector<FieldRef> fields;
  for (int pass = 0; pass < 2; ++pass) {
    Parity want = pass == 0 ? Parity::fermion : Parity::boson;
    for (int v = 1; v <= rules.vertex_count(); ++v) {
      FieldRef f = rules.field_of(v);
      if (f.kind == want) fields.push_back(f);
    }
  }

  std::ostringstream out;
  for (int k : colors) {
    for (const FieldRef& f : fields) {
      const FieldTerm& term = rules.rule(k, f);
      if (format == RuleFormat::text) {
        out << 'Q' << k << '(' << f.str() << ") = " << render_term_text(term)
            << '\n';
      } else {
        out << "Q_{" << k << "}(" << (f.kind == Parity::boson ? "b" : "f") << "_{"
            << f.vertex << "}) = " << render_term_latex(term) << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace adinkra
