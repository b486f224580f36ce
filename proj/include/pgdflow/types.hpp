#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace pgdflow {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;

// Driving term of the linearised channel problem: pressure gradient (P)
// or temperature gradient (T).
enum class Case { P, T };

inline const char* case_name(Case c) { return c == Case::P ? "P" : "T"; }

// Thrown when a linear solve or iteration breaks down for numeric reasons.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// I/O failures, always carrying the offending path in the message.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace pgdflow
