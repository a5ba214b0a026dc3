#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hc {

struct VerifyLine {
  std::string suite;
  std::string item;
  bool pass;
  std::string detail;
};

struct VerifyOptions {
  int n_max = 3;
  /// 0 picks the level from the exactness rule
  int level = 0;
  /// restricts the fock suite to one n when positive
  int n = 0;
};

/// Suites: schrodinger, momentum, tensors, ladders, correspondence, stark, fock, errata, all.
/// Throws std::invalid_argument for an unknown suite.
std::vector<VerifyLine> run_verification(const std::string& suite, const VerifyOptions& opts);
std::vector<std::string> verification_suites();

/// Command-line entry point; args exclude the program name. Returns 0 on success,
/// 1 when a verification line fails and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hc
