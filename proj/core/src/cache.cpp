#include "franel/cache.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "franel/csv.hpp"
#include "franel/error.hpp"
#include "franel/version.hpp"

namespace franel {

namespace {

constexpr std::string_view kChecksumPrefix = "# checksum=fnv1a64:";

std::string checksum_hex(std::string_view payload) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(payload)));
  return buf;
}

// The `k,p_value,term_count` table plus its header row; this is the region the
// checksum covers.
std::string payload_for(const DenominatorProfile& profile) {
  std::string payload = "k,p_value,term_count\n";
  for (std::uint64_t k = 2; k <= profile.m; ++k) {
    payload += std::to_string(k);
    payload += ',';
    payload += format_double(profile.p_values[k]);
    payload += ',';
    payload += std::to_string(profile.term_counts[k]);
    payload += '\n';
  }
  return payload;
}

}  // namespace

void write_profile_csv(std::ostream& out, const DenominatorProfile& profile) {
  const std::string payload = payload_for(profile);
  out << "# franel profile m=" << profile.m << " convention=" << to_string(profile.convention)
      << " version=" << kVersion << "\n";
  out << "# m,n,r_total,convention\n";
  out << "# " << profile.m << ',' << profile.n << ',' << format_double(profile.r_total) << ','
      << to_string(profile.convention) << "\n";
  out << kChecksumPrefix << checksum_hex(payload) << "\n";
  out << payload;
}

DenominatorProfile read_profile_csv(std::istream& in) {
  std::string line;
  std::string metadata;
  std::string checksum;

  // Comment block: provenance, the m,n,r_total,convention metadata line, and
  // the checksum of everything after the comment block.
  while (in.peek() == '#') {
    std::getline(in, line);
    if (line.starts_with(kChecksumPrefix)) {
      checksum = line.substr(kChecksumPrefix.size());
    } else if (line.size() > 2 && (std::isdigit(static_cast<unsigned char>(line[2])) != 0)) {
      metadata = line.substr(2);
    }
  }
  if (metadata.empty()) throw ChecksumError("profile csv: missing metadata line");

  std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!checksum.empty() && checksum_hex(payload) != checksum) {
    throw ChecksumError("profile csv: checksum mismatch");
  }

  const auto meta = split_csv(metadata);
  if (meta.size() != 4) throw ChecksumError("profile csv: malformed metadata line");

  DenominatorProfile profile;
  profile.m = parse_uint(meta[0]);
  profile.n = parse_uint(meta[1]);
  profile.r_total = parse_double(meta[2]);
  const auto convention = convention_from_string(meta[3]);
  if (!convention) throw ChecksumError("profile csv: unknown convention");
  profile.convention = *convention;

  profile.p_values.assign(profile.m + 1, 0.0);
  profile.term_counts.assign(profile.m + 1, 0);

  std::istringstream rows(payload);
  std::getline(rows, line);  // k,p_value,term_count header
  std::uint64_t seen = 0;
  while (std::getline(rows, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 3) throw ChecksumError("profile csv: malformed row");
    const std::uint64_t k = parse_uint(fields[0]);
    if (k < 2 || k > profile.m) throw ChecksumError("profile csv: k out of range");
    profile.p_values[k] = parse_double(fields[1]);
    profile.term_counts[k] = parse_uint(fields[2]);
    ++seen;
  }
  if (seen != profile.m - 1) throw ChecksumError("profile csv: missing rows");
  return profile;
}

void write_terms_csv(std::ostream& out, std::uint64_t m, IndexConvention convention) {
  out << "# franel terms m=" << m << " convention=" << to_string(convention)
      << " version=" << kVersion << "\n";
  out << "i,num,den,deviation,squared\n";
  for_each_term(m, convention, [&](const DeviationTerm& term) {
    out << term.fraction.index << ',' << term.fraction.num << ',' << term.fraction.den << ','
        << format_double(term.deviation) << ',' << format_double(term.squared) << '\n';
  });
}

ProfileCache::ProfileCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ProfileCache::path_for(std::uint64_t m, IndexConvention convention) const {
  std::string name = "profile-m" + std::to_string(m) + "-" +
                     std::string(to_string(convention)) + "-v" + kVersion + ".csv";
  return dir_ / name;
}

std::optional<DenominatorProfile> ProfileCache::load(std::uint64_t m,
                                                     IndexConvention convention) const {
  const auto path = path_for(m, convention);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  DenominatorProfile profile = read_profile_csv(in);
  if (profile.m != m || profile.convention != convention) {
    throw ChecksumError("profile cache: file content does not match its key");
  }
  return profile;
}

void ProfileCache::store(const DenominatorProfile& profile) const {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(profile.m, profile.convention);
  const auto tmp = path.string() + ".tmp";

  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("profile cache: cannot open for write", tmp);
    write_profile_csv(out, profile);
    out.flush();
    if (!out) throw IoError("profile cache: write failed", tmp);
  }
  // Atomic within one filesystem; readers see the old file or the new one.
  std::filesystem::rename(tmp, path);
}

DenominatorProfile ProfileCache::load_or_compute(std::uint64_t m,
                                                 IndexConvention convention) const {
  try {
    if (auto cached = load(m, convention)) return *cached;
  } catch (const ChecksumError&) {
    // Corrupt entry: fall through and recompute over it.
  }
  DenominatorProfile profile = compute_profile(m, convention);
  store(profile);
  return profile;
}

}  // namespace franel
