#pragma once

// JSON encodings used by the command-line tool.

#include <string>
#include <vector>

#include "json.hpp"

#include "hwv/combinatorics.hpp"
#include "hwv/hwv.hpp"
#include "hwv/pictures.hpp"
#include "hwv/polyring.hpp"
#include "hwv/specht.hpp"

namespace hwv::json_io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const SkewDiagram& e) {
  return Json{{"outer", e.outer().parts()}, {"inner", e.inner().parts()}};
}

inline Json to_json(const Tableau& t) {
  Json rows = Json::array();
  const auto& e = t.shape();
  for (int i = 1; i <= e.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= e.last_col(i); ++j) {
      if (j < e.first_col(i)) {
        row.push_back(nullptr);
      } else {
        row.push_back(t.at({i, j}));
      }
    }
    rows.push_back(std::move(row));
  }
  return Json{{"shape", to_json(e)}, {"rows", std::move(rows)}};
}

inline Json to_json(const Cell& c) { return Json::array({c.row, c.col}); }

inline Json to_json(const DiagramMapping& a) {
  Json out = Json::array();
  auto cells = a.source().cells();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    out.push_back(Json::array({to_json(cells[k]), to_json(a.images()[k])}));
  }
  return out;
}

inline Json to_json(const GroupAlgebraElement& a) {
  Json out = Json::array();
  for (const auto& [g, c] : a.terms()) out.push_back(Json{{"perm", g.images()}, {"coeff", to_string(c)}});
  return out;
}

inline Json to_json(const QPolynomial& q) {
  Json coeffs = Json::array();
  for (const auto& [d, c] : q.coeffs) {
    // Coefficients stay exact even when they overflow a JSON integer.
    if (c.fits_slong_p()) {
      coeffs.push_back(Json::array({d, c.get_si()}));
    } else {
      coeffs.push_back(Json::array({d, c.get_str()}));
    }
  }
  return Json{{"coeffs", std::move(coeffs)}};
}

inline Json to_json(const Polynomial& p) {
  const auto& d = p.dims();
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) {
    Json m = Json::array();
    for (std::size_t k = 0; k < mono.size();) {
      std::size_t e = k;
      while (e < mono.size() && mono[e] == mono[k]) ++e;
      auto id = var_id(d, mono[k]);
      m.push_back(Json::array({id.l, id.i, id.j, static_cast<int>(e - k)}));
      k = e;
    }
    terms.push_back(Json{{"coeff", to_string(c)}, {"monomial", std::move(m)}});
  }
  return Json{{"vars", {{"m", d.m}, {"r", d.rows}, {"s", d.cols}}}, {"terms", std::move(terms)}};
}

inline Json to_json(const HwvLabel& l) {
  return Json{{"nu", l.nu}, {"P", to_json(l.P)}, {"Q", to_json(l.Q)}, {"alpha", to_json(l.alpha)}};
}

// ---------------------------------------------------------------------------
// Parsing. Every failure surfaces as nlohmann::json::exception or
// ConstraintError.
// ---------------------------------------------------------------------------

inline Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

inline SkewDiagram skew_from_json(const Json& j) {
  Partition inner;
  if (j.contains("inner")) inner = partition_from_json(j.at("inner"));
  return SkewDiagram(partition_from_json(j.at("outer")), inner);
}

inline Tableau tableau_from_json(const Json& j) {
  SkewDiagram e = skew_from_json(j.at("shape"));
  const Json& rows = j.at("rows");
  require(rows.is_array() && static_cast<int>(rows.size()) == e.rows(), "tableau rows do not match the shape");
  std::vector<int> entries;
  for (int i = 1; i <= e.rows(); ++i) {
    const Json& row = rows.at(i - 1);
    require(static_cast<int>(row.size()) == e.last_col(i), "tableau row length does not match the shape");
    for (int c = 1; c <= e.last_col(i); ++c) {
      const Json& v = row.at(c - 1);
      if (c < e.first_col(i)) {
        require(v.is_null(), "inner cells must be null");
      } else {
        entries.push_back(v.get<int>());
      }
    }
  }
  return Tableau(e, entries);
}

inline Polynomial polynomial_from_json(const Json& j) {
  const Json& v = j.at("vars");
  RingDims d{v.at("m").get<int>(), v.at("r").get<int>(), v.at("s").get<int>()};
  require(d.m >= 1 && d.rows >= 1 && d.cols >= 1, "polynomial ring dimensions must be positive");
  Polynomial p(d);
  for (const auto& term : j.at("terms")) {
    Rational c = parse_rational(term.at("coeff").get<std::string>());
    Monomial mono;
    for (const auto& f : term.at("monomial")) {
      int l = f.at(0).get<int>(), i = f.at(1).get<int>(), jj = f.at(2).get<int>(), e = f.at(3).get<int>();
      require(l >= 1 && l <= d.m && i >= 1 && i <= d.rows && jj >= 1 && jj <= d.cols && e >= 0,
              "monomial factor out of range");
      for (int k = 0; k < e; ++k) mono.push_back(var_index(d, {l, i, jj}));
    }
    std::sort(mono.begin(), mono.end());
    p.add_term(mono, c);
  }
  return p;
}

}  // namespace hwv::json_io
