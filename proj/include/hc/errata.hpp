#pragma once

#include <string>
#include <vector>

namespace hc {

/// A printed form of an identity and its corrected form, each
/// evaluated by an oracle run.
struct Erratum {
  std::string name;
  std::string printed;
  std::string verified;
  bool printed_holds;
  bool verified_holds;
  /// verified statement holds and the printed one fails
  bool decided() const { return verified_holds && !printed_holds; }
};

/// Every flagged discrepancy, decided at call time.
std::vector<Erratum> check_errata();

}  // namespace hc
