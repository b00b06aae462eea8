#include "knotapprox/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "knotapprox/error.hpp"

namespace fs = std::filesystem;

namespace knotapprox {

namespace {

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    out += line;
    out += '\n';
  }
  return out;
}

bool is_link_file(const fs::path& p) {
  const auto ext = p.extension().string();
  return ext == ".pd" || ext == ".braid";
}

std::vector<fs::path> link_files(const std::string& dir) {
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) throw Error(ErrorKind::Io, "no corpus directory at " + dir);
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && is_link_file(e.path())) files.push_back(e.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.stem() < b.stem(); });
  return files;
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("KNOTAPPROX_DATA"); env && *env) return env;
  return KNOTAPPROX_DATA_DIR;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinkDiagram parse_link(const std::string& text) {
  const std::string body = strip_comments(text);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && body.compare(first, 2, "PD") == 0) return parse_pd(text);
  return from_braid(parse_braid(body));
}

std::string resolve_link_path(const std::string& ref) {
  if (fs::is_regular_file(ref)) return ref;
  for (const char* sub : {"corpus", "singular"})
    for (const char* ext : {"", ".pd", ".braid"}) {
      const fs::path p = fs::path(data_dir()) / sub / (ref + ext);
      if (fs::is_regular_file(p)) return p.string();
    }
  throw Error(ErrorKind::Io, "no link file or corpus entry named '" + ref + "'");
}

LinkDiagram load_link(const std::string& ref) {
  return parse_link(read_text_file(resolve_link_path(ref)));
}

std::vector<CorpusLink> load_corpus(const std::string& dir) {
  std::vector<CorpusLink> out;
  for (const fs::path& p : link_files(dir))
    out.push_back({p.stem().string(), parse_link(read_text_file(p.string()))});
  return out;
}

std::vector<CorpusLink> load_corpus() { return load_corpus(data_dir() + "/corpus"); }

std::vector<SingularSample> load_singular_samples(const std::string& dir) {
  std::vector<SingularSample> out;
  for (const fs::path& p : link_files(dir))
    out.push_back({p.stem().string(), parse_link(read_text_file(p.string()))});
  return out;
}

std::vector<SingularSample> load_singular_samples() {
  return load_singular_samples(data_dir() + "/singular");
}

}  // namespace knotapprox
