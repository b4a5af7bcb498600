#include <algorithm>
#include <system_error>

#include "mlint/cli/cli.hpp"

namespace mlint::cli {

namespace fs = std::filesystem;

namespace {

bool skipped(const fs::path& entry, const std::vector<std::string>& exclude) {
  const std::string name = entry.filename().string();
  if (name.size() > 1 && name[0] == '.') return true;
  return std::find(exclude.begin(), exclude.end(), name) != exclude.end();
}

void collect(const fs::path& dir, const std::vector<std::string>& exclude, std::vector<fs::path>& out) {
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
    const fs::path& entry = it->path();
    if (skipped(entry, exclude)) continue;
    std::error_code type_ec;
    if (it->is_directory(type_ec) && !it->is_symlink(type_ec)) {
      collect(entry, exclude, out);
    } else if (it->is_regular_file(type_ec) && entry.extension() == ".py") {
      out.push_back(entry);
    }
  }
}

}  // namespace

std::vector<fs::path> discover(const std::vector<fs::path>& paths, const std::vector<std::string>& exclude) {
  std::vector<fs::path> out;
  for (const fs::path& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      collect(p, exclude, out);
    } else if (fs::exists(p, ec)) {
      out.push_back(p);
    } else {
      throw UsageError("no such file or directory: " + p.generic_string());
    }
  }
  std::sort(out.begin(), out.end(),
            [](const fs::path& a, const fs::path& b) { return a.generic_string() < b.generic_string(); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const fs::path& a, const fs::path& b) { return a.generic_string() == b.generic_string(); }),
            out.end());
  return out;
}

}  // namespace mlint::cli
