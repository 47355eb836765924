#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "segrelab/parse.hpp"
#include "segrelab/polynomial.hpp"
#include "segrelab/version.hpp"

namespace segrelab {

inline std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

template <class F>
std::string field_tag(const F& k) {
  if constexpr (F::is_finite)
    return "F" + std::to_string(k.characteristic());
  else
    return "Q";
}

// Content-addressed store for reduced Groebner bases.  Keys hash the field,
// the variable list, the order, and the sorted canonical generator strings,
// so any generating set of the same ideal presented the same way hits the
// same entry.  Writes go through a temp file plus rename; a file that fails
// to parse back is treated as absent.
class gb_cache {
 public:
  static gb_cache& instance() {
    static gb_cache c;
    return c;
  }

  void set_directory(std::string dir) {
    std::lock_guard<std::mutex> lk(mu_);
    dir_ = std::move(dir);
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  // Tests bump this to simulate an engine upgrade; every key changes.
  void set_version_tag(std::string v) {
    std::lock_guard<std::mutex> lk(mu_);
    version_ = std::move(v);
  }
  std::string version_tag() const {
    std::lock_guard<std::mutex> lk(mu_);
    return version_;
  }

  std::string directory() const {
    std::lock_guard<std::mutex> lk(mu_);
    return dir_;
  }

  bool enabled() const { return !directory().empty(); }

  template <class F>
  std::string key_for(const ring_ptr<F>& r,
                      const std::vector<polynomial<F>>& gens) const {
    std::ostringstream os;
    os << version_tag() << "\nfield " << field_tag(r->field()) << "\nvars";
    for (const auto& v : r->vars()) os << ' ' << v;
    os << "\norder " << r->order().to_string() << '\n';
    std::vector<std::string> lines;
    lines.reserve(gens.size());
    for (const auto& g : gens) lines.push_back(format_poly(normalize_generator(g)));
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    for (const auto& l : lines) os << l << '\n';
    return sha256_hex(os.str());
  }

  template <class F>
  std::optional<std::vector<polynomial<F>>> load(const ring_ptr<F>& r,
                                                 const std::string& key) const {
    std::string dir = directory();
    if (dir.empty()) return std::nullopt;
    std::ifstream in(std::filesystem::path(dir) / (key + ".gb"));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != "segrelab-gb 1") return std::nullopt;
    if (!std::getline(in, line) || line != "field " + field_tag(r->field()))
      return std::nullopt;
    if (!std::getline(in, line) || line != "order " + r->order().to_string())
      return std::nullopt;
    std::vector<polynomial<F>> basis;
    try {
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        basis.push_back(parse_poly(r, line));
      }
    } catch (const parse_error&) {
      return std::nullopt;
    }
    return basis;
  }

  template <class F>
  void store(const std::string& key, const ring_ptr<F>& r,
             const std::vector<polynomial<F>>& basis) const {
    std::string dir = directory();
    if (dir.empty()) return;
    std::filesystem::path final_path = std::filesystem::path(dir) / (key + ".gb");
    std::filesystem::path tmp =
        final_path.string() + ".tmp." + std::to_string(next_tmp_id());
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) return;
      out << "segrelab-gb 1\n";
      out << "field " << field_tag(r->field()) << '\n';
      out << "order " << r->order().to_string() << '\n';
      for (const auto& g : basis) out << format_poly(g) << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

 private:
  gb_cache() = default;
  static std::uint64_t next_tmp_id() {
    static std::atomic<std::uint64_t> n{0};
    return ++n;
  }

  mutable std::mutex mu_;
  std::string dir_;
  std::string version_ = engine_version();
};

}  // namespace segrelab
