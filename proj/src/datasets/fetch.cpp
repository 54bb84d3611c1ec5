#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <mutex>
#include <system_error>

#include <curl/curl.h>

#include "tracklight/datasets.hpp"

namespace fs = std::filesystem;

namespace tracklight::datasets {

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("sha256: digest initialisation failed");
    }
  }

  void update(const void* data, std::size_t n) { EVP_DigestUpdate(ctx_.get(), data, n); }

  std::string hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), md.data(), &len);
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out += kDigits[md[i] >> 4];
      out += kDigits[md[i] & 0xf];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

/// Exclusive advisory lock on a sidecar file, released on destruction.
class FileLock {
 public:
  explicit FileLock(const fs::path& path) : fd_(::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644)) {
    if (fd_ < 0) throw fs::filesystem_error("cannot open lock file", path, std::error_code(errno, std::generic_category()));
    while (::flock(fd_, LOCK_EX) != 0) {
      if (errno != EINTR) {
        const int err = errno;
        ::close(fd_);
        throw fs::filesystem_error("cannot lock", path, std::error_code(err, std::generic_category()));
      }
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

class CurlTransport final : public Transport {
 public:
  CurlTransport() {
    static std::once_flag once;
    std::call_once(once, [] { curl_global_init(CURL_GLOBAL_DEFAULT); });
  }

  void get(const std::string& url, const fs::path& destination) override {
    std::unique_ptr<FILE, decltype(&std::fclose)> file(std::fopen(destination.c_str(), "wb"), &std::fclose);
    if (!file) throw TransferError("cannot open " + destination.string() + " for writing");
    std::unique_ptr<CURL, decltype(&curl_easy_cleanup)> curl(curl_easy_init(), &curl_easy_cleanup);
    if (!curl) throw TransferError("curl initialisation failed");
    char error[CURL_ERROR_SIZE] = {};
    curl_easy_setopt(curl.get(), CURLOPT_URL, url.c_str());
    curl_easy_setopt(curl.get(), CURLOPT_HTTPGET, 1L);
    curl_easy_setopt(curl.get(), CURLOPT_FOLLOWLOCATION, 1L);
    curl_easy_setopt(curl.get(), CURLOPT_MAXREDIRS, 5L);
    curl_easy_setopt(curl.get(), CURLOPT_PROTOCOLS, static_cast<long>(CURLPROTO_HTTP | CURLPROTO_HTTPS));
    curl_easy_setopt(curl.get(), CURLOPT_REDIR_PROTOCOLS, static_cast<long>(CURLPROTO_HTTP | CURLPROTO_HTTPS));
    curl_easy_setopt(curl.get(), CURLOPT_FAILONERROR, 1L);
    curl_easy_setopt(curl.get(), CURLOPT_WRITEDATA, file.get());
    curl_easy_setopt(curl.get(), CURLOPT_ERRORBUFFER, error);
    const CURLcode rc = curl_easy_perform(curl.get());
    if (rc != CURLE_OK) {
      throw TransferError("GET " + url + " failed: " + (error[0] ? std::string(error) : curl_easy_strerror(rc)));
    }
    if (std::fflush(file.get()) != 0) throw TransferError("write to " + destination.string() + " failed");
  }
};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  Sha256 h;
  h.update(bytes.data(), bytes.size());
  return h.hex();
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fs::filesystem_error("cannot read", path, std::make_error_code(std::errc::io_error));
  Sha256 h;
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return h.hex();
}

std::unique_ptr<Transport> make_http_transport() { return std::make_unique<CurlTransport>(); }

fs::path fetch_segment(const DatasetRegistryEntry& entry, const std::string& segment_id, const fs::path& cache_dir,
                       Transport& transport) {
  const auto it = entry.segments.find(segment_id);
  if (it == entry.segments.end()) {
    throw LookupError("dataset '" + entry.dataset_id + "' has no segment '" + segment_id + "'");
  }
  const SegmentSource& source = it->second;

  const fs::path dir = cache_dir / entry.dataset_id;
  fs::create_directories(dir);
  const fs::path target = dir / segment_id;
  FileLock lock(fs::path(target).concat(".lock"));

  if (fs::is_regular_file(target) && sha256_file(target) == source.sha256) return target;

  const fs::path partial = fs::path(target).concat(".part");
  try {
    transport.get(source.url, partial);
  } catch (...) {
    std::error_code ec;
    fs::remove(partial, ec);
    throw;
  }
  const std::string digest = sha256_file(partial);
  if (digest != source.sha256) {
    std::error_code ec;
    fs::remove(partial, ec);
    fs::remove(target, ec);
    throw IntegrityError("segment '" + segment_id + "' of '" + entry.dataset_id + "' has sha256 " + digest +
                         ", registry expects " + source.sha256);
  }
  fs::rename(partial, target);
  return target;
}

}  // namespace tracklight::datasets
