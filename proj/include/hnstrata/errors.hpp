#pragma once

#include <stdexcept>
#include <string>

namespace hnstrata {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct length_mismatch : error {
  explicit length_mismatch(const std::string& msg) : error(msg) {}
};

struct integrality_error : error {
  explicit integrality_error(const std::string& msg) : error(msg) {}
};

struct kappa_mismatch : error {
  explicit kappa_mismatch(const std::string& msg) : error(msg) {}
};

struct inconsistent_kappa : error {
  explicit inconsistent_kappa(const std::string& msg) : error(msg) {}
};

struct singular_matrix : error {
  explicit singular_matrix(const std::string& msg) : error(msg) {}
};

struct zero_vector : error {
  explicit zero_vector(const std::string& msg) : error(msg) {}
};

struct repeated_slopes : error {
  explicit repeated_slopes(const std::string& msg) : error(msg) {}
};

struct not_minuscule : error {
  explicit not_minuscule(const std::string& msg) : error(msg) {}
};

struct empty_stratum : error {
  explicit empty_stratum(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
  explicit parse_error(const std::string& msg) : error(msg) {}
};

}  // namespace hnstrata
