#pragma once

/**
 * Append-only JSON-lines cache of command results, keyed by
 * (command, params, tool_version). Writers take an exclusive flock on the
 * file and readers a shared one, so concurrent processes never interleave
 * partial lines. Unparseable lines are skipped with a warning.
 */

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquedec/io.hpp"

namespace cliquedec {

struct RunRecord {
  std::string command;
  Json params = Json::object();
  Json result;
  std::string tool_version = kToolVersion;
  std::string timestamp;
  std::optional<std::uint64_t> seed;
};

inline auto utc_timestamp() -> std::string {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline auto to_json(const RunRecord& r) -> Json {
  Json j{{"command", r.command},
         {"params", r.params},
         {"tool_version", r.tool_version},
         {"timestamp", r.timestamp},
         {"seed", r.seed ? Json(*r.seed) : Json(nullptr)},
         {"result", r.result}};
  return j;
}

class RunCache {
 public:
  static constexpr const char* kEnvVar = "CLIQUEDEC_CACHE_DIR";
  static constexpr const char* kFileName = "runs.jsonl";

  explicit RunCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

  static auto default_directory() -> std::filesystem::path {
    if (const char* dir = std::getenv(kEnvVar); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "cliquedec";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "cliquedec";
    return ".cliquedec-cache";
  }

  auto file() const -> std::filesystem::path { return directory_ / kFileName; }
  auto warnings() const -> const std::vector<std::string>& { return warnings_; }

  // Result payload of the latest matching record, if any.
  auto lookup(const std::string& command, const Json& params, const std::string& tool_version = kToolVersion)
      -> std::optional<Json> {
    const int fd = ::open(file().c_str(), O_RDONLY | O_CLOEXEC);
    if (fd < 0) return std::nullopt;
    Descriptor guard{fd};
    if (::flock(fd, LOCK_SH) != 0) throw std::runtime_error("run cache: flock failed: " + std::string(std::strerror(errno)));
    const std::string text = read_all(fd);

    std::optional<Json> hit;
    std::size_t line_no = 0;
    for (std::size_t pos = 0; pos < text.size();) {
      auto end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      const std::string line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (line.empty()) continue;
      try {
        const auto record = Json::parse(line);
        if (record.at("command") == command && record.at("params") == params &&
            record.at("tool_version") == tool_version)
          hit = record.at("result");
      } catch (const std::exception& e) {
        warnings_.push_back(file().string() + ":" + std::to_string(line_no) + ": skipping corrupt cache line (" + e.what() + ")");
      }
    }
    return hit;
  }

  auto store(RunRecord record) -> void {
    if (record.timestamp.empty()) record.timestamp = utc_timestamp();
    std::filesystem::create_directories(directory_);
    const std::string line = to_json(record).dump() + "\n";
    const int fd = ::open(file().c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd < 0) throw std::runtime_error("run cache: cannot open " + file().string() + ": " + std::strerror(errno));
    Descriptor guard{fd};
    if (::flock(fd, LOCK_EX) != 0) throw std::runtime_error("run cache: flock failed: " + std::string(std::strerror(errno)));
    for (std::size_t written = 0; written < line.size();) {
      const auto n = ::write(fd, line.data() + written, line.size() - written);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw std::runtime_error("run cache: write failed: " + std::string(std::strerror(errno)));
      }
      written += static_cast<std::size_t>(n);
    }
  }

 private:
  // Closing the descriptor also releases its flock.
  struct Descriptor {
    int fd;
    explicit Descriptor(int f) : fd(f) {}
    Descriptor(const Descriptor&) = delete;
    auto operator=(const Descriptor&) -> Descriptor& = delete;
    ~Descriptor() { ::close(fd); }
  };

  static auto read_all(int fd) -> std::string {
    std::string out;
    char buf[1 << 16];
    for (;;) {
      const auto n = ::read(fd, buf, sizeof buf);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw std::runtime_error("run cache: read failed: " + std::string(std::strerror(errno)));
      }
      if (n == 0) break;
      out.append(buf, static_cast<std::size_t>(n));
    }
    return out;
  }

  std::filesystem::path directory_;
  std::vector<std::string> warnings_;
};

}  // namespace cliquedec
