#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "franel/profile.hpp"

namespace franel {

// Profile serialization. The format is a CSV table `k,p_value,term_count`
// preceded by comment lines carrying provenance, the metadata line
// `m,n,r_total,convention` and an FNV-1a checksum of everything below the
// checksum line. Floats are shortest-round-trip decimals, so a written profile
// reads back bit-identical.
void write_profile_csv(std::ostream& out, const DenominatorProfile& profile);
DenominatorProfile read_profile_csv(std::istream& in);  // throws ChecksumError / IoError

// Per-term CSV `i,num,den,deviation,squared` streamed without materializing
// the sequence.
void write_terms_csv(std::ostream& out, std::uint64_t m, IndexConvention convention);

// One file per (m, convention, code version) under dir; writes go to a
// temporary file first and are renamed into place, so readers never observe a
// partial file.
class ProfileCache {
 public:
  explicit ProfileCache(std::filesystem::path dir);

  std::filesystem::path path_for(std::uint64_t m, IndexConvention convention) const;

  // nullopt when absent; ChecksumError when present but corrupt.
  std::optional<DenominatorProfile> load(std::uint64_t m, IndexConvention convention) const;

  void store(const DenominatorProfile& profile) const;

  // load, or compute_profile + store on miss (and on checksum failure).
  DenominatorProfile load_or_compute(std::uint64_t m, IndexConvention convention) const;

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace franel
