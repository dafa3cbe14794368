#pragma once

#include <filesystem>
#include <string>

#include "lelat/asymptotics.hpp"
#include "lelat/audit.hpp"
#include "lelat/lel.hpp"
#include "lelat/spectral.hpp"

namespace lelat {

/// Throws io_error on NaN or infinity; every emitter runs its numbers
/// through this before formatting.
void ensure_finite(double v);

/// Shortest round-trip decimal with at most `sig` significant digits (%.*g).
std::string format_sig(double v, int sig = 12);

/// Value rounded to `sig` significant decimal digits; JSON payloads carry
/// rounded doubles so emitted text never depends on excess binary digits.
double round_sig(double v, int sig = 12);

/// Writes via a sibling temp file plus rename, so readers never observe a
/// partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string spectrum_csv(const Spectrum& s);
std::string spectrum_json(const Spectrum& s, const SpectrumComparison* comparison = nullptr);

std::string lel_csv(const LelValue& v);
std::string lel_json(const LelValue& v);

std::string quadrature_csv(const QuadratureResult& r, const std::string& label);
std::string quadrature_json(const QuadratureResult& r, const std::string& label);
/// Like quadrature_json but with an optional second result computed under
/// the tabulated branch weighting (j312 / tkl constants).
std::string constant_json(const QuadratureResult& primary, const std::string& label,
                          const QuadratureResult* reference_weighted);

std::string convergence_csv(const ConvergenceReport& r);
std::string convergence_json(const ConvergenceReport& r);
/// Two-column "size deviation" blocks per boundary, blank-line separated,
/// ready for plotting.
std::string convergence_plot_data(const ConvergenceReport& r);

std::string audit_json(const AuditReport& r);

std::string perturbation_json(const PerturbationTrials& t, std::uint64_t seed,
                              int n_vertices, double edge_prob);

}  // namespace lelat
