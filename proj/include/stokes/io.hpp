#pragma once

#include <string>
#include <variant>
#include <vector>

#include "stokes/analysis.hpp"
#include "stokes/families.hpp"
#include "stokes/mixtures.hpp"

namespace stokes {

// All numeric output is printed with 12 significant digits.
std::string format_real(double v);

using Document = std::variant<ComplexMatrix, CoherenceTensor, Mixture>;

// Parses a JSON document tagged "density-matrix", "coherence-tensor" or
// "mixture". Structural problems throw ParseError; content violations
// (hermiticity, trace, affine component, weight normalization) throw the
// matching semantic error. Non-finite numbers are rejected by the JSON
// grammar itself.
Document parse_document(const std::string& text);

// Reads a document from a file path, or from stdin when path is "-".
Document load_document(const std::string& path);

std::string density_document(const ComplexMatrix& rho);
std::string tensor_document(const CoherenceTensor& t);
std::string mixture_document(const Mixture& m);

// Header x,y,min_eig_rho,min_eig_pt,class then one row per sample in
// grid order.
std::string region_csv(const std::vector<RegionSample>& samples);

// Qubits are lettered A, B, C, ... in human-readable reports.
std::string subset_name(const std::vector<int>& qubits);

std::string analysis_report_text(const AnalysisReport& rep);
std::string analysis_report_json(const AnalysisReport& rep);

}  // namespace stokes
