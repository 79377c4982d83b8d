#include "setpart/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "httplib.h"

namespace setpart {

namespace fs = std::filesystem;

std::string_view to_string(OeisErrorKind kind) {
  switch (kind) {
    case OeisErrorKind::kMalformedId: return "malformed_id";
    case OeisErrorKind::kOffline: return "offline";
    case OeisErrorKind::kMalformedResponse: return "malformed_response";
    case OeisErrorKind::kUnknownId: return "unknown_id";
    case OeisErrorKind::kCacheCorrupt: return "cache_corrupt";
    case OeisErrorKind::kCacheWrite: return "cache_write";
  }
  return "?";
}

OeisError::OeisError(OeisErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

bool is_well_formed_oeis_id(std::string_view id) {
  return id.size() == 7 && id[0] == 'A' &&
         std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

namespace {

void require_id(std::string_view id) {
  if (!is_well_formed_oeis_id(id)) {
    throw OeisError(OeisErrorKind::kMalformedId, "malformed OEIS id '" + std::string(id) + "'");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(std::string_view id, std::size_t line, const std::string& what) {
  throw OeisError(OeisErrorKind::kMalformedResponse,
                  "b-file for " + std::string(id) + ", line " + std::to_string(line) + ": " + what);
}

}  // namespace

OeisSequence parse_bfile(std::string_view id, std::string_view text) {
  require_id(id);
  OeisSequence seq;
  seq.id = std::string(id);
  std::size_t line_no = 0;
  std::int64_t expected_index = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    if (seq.truncated) continue;

    auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) malformed(id, line_no, "expected 'index value'");
    std::string_view index_text = line.substr(0, sep);
    std::string_view value_text = trim(line.substr(sep));

    std::int64_t index = 0;
    auto [ip, iec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if (iec != std::errc{} || ip != index_text.data() + index_text.size()) malformed(id, line_no, "bad index");
    if (seq.terms.empty()) {
      seq.offset = index;
    } else if (index != expected_index) {
      malformed(id, line_no, "non-consecutive index");
    }
    expected_index = index + 1;

    std::int64_t value = 0;
    auto [vp, vec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (vec == std::errc::result_out_of_range) {
      seq.truncated = true;
      continue;
    }
    if (vec != std::errc{} || vp != value_text.data() + value_text.size()) malformed(id, line_no, "bad value");
    seq.terms.push_back(value);
  }
  if (seq.terms.empty()) malformed(id, line_no, "no terms");
  return seq;
}

std::string serialize_bfile(const OeisSequence& seq) {
  std::ostringstream out;
  out << "# " << seq.id << '\n';
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    out << seq.offset + static_cast<std::int64_t>(i) << ' ' << seq.terms[i] << '\n';
  }
  return out.str();
}

OeisClientOptions default_client_options() {
  OeisClientOptions o;
  if (const char* env = std::getenv("SETPART_OEIS_CACHE"); env && *env) {
    o.cache_dir = env;
  } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    o.cache_dir = fs::path(xdg) / "setpart" / "oeis";
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    o.cache_dir = fs::path(home) / ".cache" / "setpart" / "oeis";
  } else {
    o.cache_dir = ".setpart-oeis-cache";
  }
  return o;
}

OeisClient::OeisClient(OeisClientOptions options) : options_(std::move(options)) {}

fs::path OeisClient::cache_path(std::string_view id) const {
  require_id(id);
  return options_.cache_dir / ("b" + std::string(id.substr(1)) + ".txt");
}

OeisSequence OeisClient::fetch(std::string_view id) const {
  require_id(id);
  const fs::path path = cache_path(id);

  std::error_code ec;
  if (fs::exists(path, ec)) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    if (!in) throw OeisError(OeisErrorKind::kCacheCorrupt, "cannot read cache file " + path.string());
    try {
      return parse_bfile(id, buf.str());
    } catch (const OeisError& e) {
      throw OeisError(OeisErrorKind::kCacheCorrupt, "cache file " + path.string() + ": " + e.what());
    }
  }

  if (!options_.allow_network) {
    throw OeisError(OeisErrorKind::kOffline, std::string(id) + " is not cached and network access is disabled");
  }

  httplib::Client client(options_.base_url);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  client.set_follow_location(true);
  const std::string target = "/" + std::string(id) + "/b" + std::string(id.substr(1)) + ".txt";
  auto res = client.Get(target, httplib::Headers{{"User-Agent", options_.user_agent}});
  if (!res) {
    throw OeisError(OeisErrorKind::kOffline, std::string(id) + " is not cached and the request to " +
                                                 options_.base_url + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status == 404) throw OeisError(OeisErrorKind::kUnknownId, "OEIS has no sequence " + std::string(id));
  if (res->status != 200) {
    throw OeisError(OeisErrorKind::kMalformedResponse,
                    "unexpected HTTP status " + std::to_string(res->status) + " for " + std::string(id));
  }
  OeisSequence seq = parse_bfile(id, res->body);

  fs::create_directories(options_.cache_dir, ec);
  std::random_device rd;
  const fs::path tmp = path.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << res->body;
    if (!out) {
      fs::remove(tmp, ec);
      throw OeisError(OeisErrorKind::kCacheWrite, "cannot write cache file " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw OeisError(OeisErrorKind::kCacheWrite, "cannot move cache file into " + path.string());
  }
  return seq;
}

CrosscheckReport crosscheck(std::span<const std::int64_t> computed, std::int64_t first_index,
                            const OeisSequence& seq, int window) {
  if (computed.empty()) throw std::invalid_argument("crosscheck needs a nonempty sequence");
  if (window < 0) throw std::invalid_argument("alignment window must be non-negative");
  CrosscheckReport best{seq.id, false, 0, 0};
  const std::size_t needed = std::min<std::size_t>(3, computed.size());
  const auto abs_less = [](int a, int b) { return std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a > b); };

  for (int shift = -window; shift <= window; ++shift) {
    std::size_t compared = 0;
    bool agree = true;
    for (std::size_t i = 0; i < computed.size(); ++i) {
      const std::int64_t k = first_index + static_cast<std::int64_t>(i) + shift - seq.offset;
      if (k < 0 || k >= static_cast<std::int64_t>(seq.terms.size())) continue;
      if (seq.terms[static_cast<std::size_t>(k)] != computed[i]) {
        agree = false;
        break;
      }
      ++compared;
    }
    if (!agree || compared < needed) continue;
    if (!best.matched || compared > best.compared_terms ||
        (compared == best.compared_terms && abs_less(shift, best.offset))) {
      best = {seq.id, true, shift, compared};
    }
  }
  return best;
}

CrosscheckReport crosscheck(std::span<const std::int64_t> computed, std::int64_t first_index,
                            std::string_view id, const OeisClient& client, int window) {
  return crosscheck(computed, first_index, client.fetch(id), window);
}

}  // namespace setpart
