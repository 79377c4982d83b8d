#pragma once

// OEIS b-file client with a mandatory local cache, and alignment checks of
// computed sequences against OEIS terms.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace setpart {

struct OeisSequence {
  std::string id;
  /// Index of the first term.
  std::int64_t offset = 0;
  std::vector<std::int64_t> terms;
  /// Set when the b-file continued past the last term that fits in 64 bits.
  bool truncated = false;

  friend bool operator==(const OeisSequence&, const OeisSequence&) = default;
};

enum class OeisErrorKind {
  kMalformedId,
  kOffline,            // network failure and no cached copy
  kMalformedResponse,  // the server answered but the body is not a b-file
  kUnknownId,          // the server has no such sequence
  kCacheCorrupt,
  kCacheWrite,
};

std::string_view to_string(OeisErrorKind kind);

class OeisError : public std::runtime_error {
 public:
  OeisError(OeisErrorKind kind, const std::string& message);
  OeisErrorKind kind() const noexcept { return kind_; }

 private:
  OeisErrorKind kind_;
};

/// "A" followed by exactly six digits.
bool is_well_formed_oeis_id(std::string_view id);

/// Parses "n a(n)" lines; '#' starts a comment, blank lines are skipped.
/// Indices must be consecutive. Throws OeisError(kMalformedResponse).
OeisSequence parse_bfile(std::string_view id, std::string_view text);
std::string serialize_bfile(const OeisSequence& seq);

struct OeisClientOptions {
  std::filesystem::path cache_dir;
  std::string base_url = "https://oeis.org";
  std::chrono::seconds timeout{10};
  std::string user_agent = "setpart/0.1";
  bool allow_network = true;
};

/// Cache directory from SETPART_OEIS_CACHE, else $XDG_CACHE_HOME/setpart/oeis,
/// else ~/.cache/setpart/oeis, else ./.setpart-oeis-cache.
OeisClientOptions default_client_options();

class OeisClient {
 public:
  explicit OeisClient(OeisClientOptions options);

  /// Cached copy if present, otherwise one GET of <base>/<id>/b<digits>.txt
  /// which is then written to the cache.
  OeisSequence fetch(std::string_view id) const;
  std::filesystem::path cache_path(std::string_view id) const;
  const OeisClientOptions& options() const noexcept { return options_; }

 private:
  OeisClientOptions options_;
};

struct CrosscheckReport {
  std::string id;
  bool matched = false;
  /// computed[i] (index first_index + i) equals a(first_index + i + offset).
  int offset = 0;
  std::size_t compared_terms = 0;
};

/// Tries every shift in [-window, window] and keeps the one comparing the
/// most terms with no disagreement; ties prefer the smaller |shift|, then the
/// positive one. A match needs at least min(3, computed.size()) compared
/// terms. Terms outside the OEIS data are not compared.
CrosscheckReport crosscheck(std::span<const std::int64_t> computed, std::int64_t first_index,
                            const OeisSequence& seq, int window = 3);

/// Fetches `id` through `client`; fetch errors propagate.
CrosscheckReport crosscheck(std::span<const std::int64_t> computed, std::int64_t first_index,
                            std::string_view id, const OeisClient& client, int window = 3);

}  // namespace setpart
