#include "stokes/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace stokes {

namespace {

using nlohmann::json;

double require_finite(double v) {
  if (!std::isfinite(v)) throw ParseError("document contains a non-finite number");
  return v;
}

double number_at(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return require_finite(j.get<double>());
}

int qubits_field(const json& doc) {
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("document field 'n' must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxQubits)
    throw ParseError("document field 'n' must lie in 1.." + std::to_string(kMaxQubits));
  return n;
}

ComplexMatrix parse_density(const json& doc) {
  const int n = qubits_field(doc);
  const int dim = 1 << n;
  if (!doc.contains("re") || !doc.contains("im"))
    throw ParseError("density document needs 're' and 'im' arrays");
  const json& re = doc["re"];
  const json& im = doc["im"];
  if (!re.is_array() || !im.is_array() || static_cast<int>(re.size()) != dim ||
      static_cast<int>(im.size()) != dim)
    throw ParseError("density arrays must have 2^n rows");
  ComplexMatrix rho(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& rrow = re[i];
    const json& irow = im[i];
    if (!rrow.is_array() || !irow.is_array() || static_cast<int>(rrow.size()) != dim ||
        static_cast<int>(irow.size()) != dim)
      throw ParseError("density rows must have 2^n entries");
    for (int j = 0; j < dim; ++j)
      rho(i, j) = Complex(number_at(rrow[j], "matrix entry"), number_at(irow[j], "matrix entry"));
  }
  if (rho.hermiticity_defect() > 1e-10)
    throw NotHermitian("density document is not Hermitian within 1e-10");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-8)
    throw BadTrace("density document trace differs from 1 beyond 1e-8");
  return rho;
}

CoherenceTensor parse_tensor(const json& doc) {
  const int n = qubits_field(doc);
  if (!doc.contains("components") || !doc["components"].is_array())
    throw ParseError("tensor document needs a 'components' array");
  const json& comps = doc["components"];
  const std::size_t expected = std::size_t{1} << (2 * n);
  if (comps.size() != expected)
    throw ParseError("tensor document must carry 4^n components");
  std::vector<double> values(expected);
  for (std::size_t j = 0; j < expected; ++j) values[j] = number_at(comps[j], "tensor component");
  const double affine = std::pow(kInvSqrt2, n);
  if (std::abs(values[0] - affine) > 1e-8)
    throw ConstraintViolation("tensor document affine component differs from (1/sqrt 2)^n");
  return CoherenceTensor(n, std::move(values));
}

Mixture parse_mixture(const json& doc) {
  const int n = qubits_field(doc);
  if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty())
    throw ParseError("mixture document needs a nonempty 'terms' array");
  Mixture m;
  m.n = n;
  double wsum = 0.0;
  for (const json& jt : doc["terms"]) {
    if (!jt.is_object() || !jt.contains("weight") || !jt.contains("bloch"))
      throw ParseError("mixture term needs 'weight' and 'bloch'");
    MixtureTerm term;
    term.weight = number_at(jt["weight"], "term weight");
    wsum += term.weight;
    const json& bloch = jt["bloch"];
    if (!bloch.is_array() || static_cast<int>(bloch.size()) != n)
      throw ParseError("mixture term must carry one Bloch row per qubit");
    for (const json& row : bloch) {
      if (!row.is_array() || row.size() != 4)
        throw ParseError("Bloch rows must have 4 entries");
      BlochVector b;
      for (int j = 0; j < 4; ++j) b.c[j] = number_at(row[j], "Bloch entry");
      if (std::abs(b.c[0] - kInvSqrt2) > 1e-8)
        throw ConstraintViolation("Bloch rows must start with 1/sqrt(2)");
      b.c[0] = kInvSqrt2;
      term.factors.push_back(b);
    }
    m.terms.push_back(std::move(term));
  }
  if (std::abs(wsum - 1.0) > 1e-8)
    throw WeightNotNormalized("mixture document weights sum to " + std::to_string(wsum));
  // Text rounding leaves the sum off by up to ~1e-11; canonicalize so the
  // strict in-memory normalization invariant holds downstream.
  for (auto& term : m.terms) term.weight /= wsum;
  return m;
}

void append_row(std::string& out, const double* vals, int count) {
  out += '[';
  for (int j = 0; j < count; ++j) {
    if (j) out += ", ";
    out += format_real(vals[j]);
  }
  out += ']';
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Document parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string())
    throw ParseError("document needs a 'format' tag");
  const std::string format = doc["format"].get<std::string>();
  if (format == "density-matrix") return parse_density(doc);
  if (format == "coherence-tensor") return parse_tensor(doc);
  if (format == "mixture") return parse_mixture(doc);
  throw ParseError("unknown document format '" + format + "'");
}

Document load_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_document(text);
}

std::string density_document(const ComplexMatrix& rho) {
  const int dim = rho.rows();
  int n = 0;
  for (int d = 1; d < dim; d *= 2) ++n;
  std::string out = "{\n  \"format\": \"density-matrix\",\n  \"n\": " + std::to_string(n) +
                    ",\n  \"re\": [\n";
  std::vector<double> row(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) row[j] = rho(i, j).real();
    out += "    ";
    append_row(out, row.data(), dim);
    out += i + 1 < dim ? ",\n" : "\n";
  }
  out += "  ],\n  \"im\": [\n";
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) row[j] = rho(i, j).imag();
    out += "    ";
    append_row(out, row.data(), dim);
    out += i + 1 < dim ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string tensor_document(const CoherenceTensor& t) {
  std::string out = "{\n  \"format\": \"coherence-tensor\",\n  \"n\": " +
                    std::to_string(t.qubits()) + ",\n  \"components\": [\n    ";
  for (std::size_t j = 0; j < t.size(); ++j) {
    out += format_real(t[j]);
    if (j + 1 < t.size()) out += (j + 1) % 8 == 0 ? ",\n    " : ", ";
  }
  out += "\n  ]\n}\n";
  return out;
}

std::string mixture_document(const Mixture& m) {
  std::string out =
      "{\n  \"format\": \"mixture\",\n  \"n\": " + std::to_string(m.n) + ",\n  \"terms\": [\n";
  for (std::size_t p = 0; p < m.terms.size(); ++p) {
    const auto& term = m.terms[p];
    out += "    {\"weight\": " + format_real(term.weight) + ", \"bloch\": [";
    for (std::size_t q = 0; q < term.factors.size(); ++q) {
      if (q) out += ", ";
      append_row(out, term.factors[q].c.data(), 4);
    }
    out += "]}";
    out += p + 1 < m.terms.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string region_csv(const std::vector<RegionSample>& samples) {
  std::string out = "x,y,min_eig_rho,min_eig_pt,class\n";
  for (const auto& s : samples) {
    out += format_real(s.x);
    out += ',';
    out += format_real(s.y);
    out += ',';
    out += format_real(s.min_eig_rho);
    out += ',';
    out += format_real(s.min_eig_pt);
    out += ',';
    out += region_class_name(s.cls);
    out += '\n';
  }
  return out;
}

std::string subset_name(const std::vector<int>& qubits) {
  std::string s;
  for (int q : qubits) s += static_cast<char>('A' + q);
  return s;
}

std::string analysis_report_text(const AnalysisReport& rep) {
  std::ostringstream out;
  out << "qubits: " << rep.n << '\n';
  out << "purity: " << format_real(rep.purity) << '\n';
  for (int q = 0; q < rep.n; ++q)
    out << "bloch radius[" << subset_name({q}) << "]: " << format_real(rep.bloch_radii[q])
        << '\n';
  for (const auto& sp : rep.reduced_purities)
    out << "reduced purity[" << subset_name(sp.qubits) << "]: " << format_real(sp.purity) << '\n';
  for (int q = 0; q < rep.n; ++q)
    out << "ppt[" << subset_name({q}) << "]: " << (rep.ppt[q].ppt ? "yes" : "no")
        << " (min eigenvalue " << format_real(rep.ppt[q].min_eigenvalue) << ")\n";
  out << "index-2 free: " << (rep.index2_free ? "yes" : "no") << '\n';
  out << "trace-square chain: " << (rep.chain_ok ? "satisfied" : "violated") << '\n';
  for (const auto& bn : rep.realignment)
    out << "realignment norm[" << subset_name(bn.left) << "|" << subset_name(bn.right)
        << "]: " << format_real(bn.norm) << '\n';
  return out.str();
}

std::string analysis_report_json(const AnalysisReport& rep) {
  std::string out = "{\n  \"qubits\": " + std::to_string(rep.n) + ",\n";
  out += "  \"purity\": " + format_real(rep.purity) + ",\n";
  out += "  \"bloch_radii\": {";
  for (int q = 0; q < rep.n; ++q) {
    if (q) out += ", ";
    out += "\"" + subset_name({q}) + "\": " + format_real(rep.bloch_radii[q]);
  }
  out += "},\n  \"reduced_purities\": {";
  for (std::size_t i = 0; i < rep.reduced_purities.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + subset_name(rep.reduced_purities[i].qubits) +
           "\": " + format_real(rep.reduced_purities[i].purity);
  }
  out += "},\n  \"ppt\": {";
  for (int q = 0; q < rep.n; ++q) {
    if (q) out += ", ";
    out += "\"" + subset_name({q}) + "\": {\"ppt\": " + (rep.ppt[q].ppt ? "true" : "false") +
           ", \"min_eigenvalue\": " + format_real(rep.ppt[q].min_eigenvalue) + "}";
  }
  out += "},\n";
  out += std::string("  \"index2_free\": ") + (rep.index2_free ? "true" : "false") + ",\n";
  out += std::string("  \"chain_ok\": ") + (rep.chain_ok ? "true" : "false") + ",\n";
  out += "  \"realignment_norms\": {";
  for (std::size_t i = 0; i < rep.realignment.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + subset_name(rep.realignment[i].left) + "|" +
           subset_name(rep.realignment[i].right) +
           "\": " + format_real(rep.realignment[i].norm);
  }
  out += "}\n}\n";
  return out;
}

}  // namespace stokes
