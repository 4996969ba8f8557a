// Copyright 2026 The ASQ Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "asq/vector_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace asq {
namespace {

[[noreturn]] void io_error(const std::filesystem::path& path,
                           const std::string& what) {
  throw Error(ErrorCode::kIo, path.string() + ": " + what);
}

[[noreturn]] void format_error(const std::filesystem::path& path,
                               const std::string& what) {
  throw Error(ErrorCode::kBadParameters, path.string() + ": " + what);
}

template <class U>
U to_little(U v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    U out = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) {
      out = (out << 8) | ((v >> (8 * i)) & 0xff);
    }
    return out;
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_error(path, "cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) io_error(path, "read failed");
  return ss.str();
}

void spill(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) io_error(path, "cannot open for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) io_error(path, "write failed");
}

template <class Word>
std::vector<Word> words_of(const std::filesystem::path& path,
                          const std::string& bytes) {
  if (bytes.size() % sizeof(Word) != 0) {
    format_error(path, "size is not a multiple of " +
                           std::to_string(sizeof(Word)) + " bytes");
  }
  std::vector<Word> out(bytes.size() / sizeof(Word));
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::memcpy(&out[i], bytes.data() + i * sizeof(Word), sizeof(Word));
    out[i] = to_little(out[i]);
  }
  return out;
}

template <class Word>
std::string bytes_of(std::span<const Word> words) {
  std::string bytes(words.size() * sizeof(Word), '\0');
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word w = to_little(words[i]);
    std::memcpy(bytes.data() + i * sizeof(Word), &w, sizeof(Word));
  }
  return bytes;
}

template <class T>
std::vector<T> parse_text_column(const std::filesystem::path& path,
                                 const std::string& text) {
  std::vector<T> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    T v{};
    std::string extra;
    if (!(ls >> v) || (ls >> extra)) {
      format_error(path, "bad value on line " + std::to_string(lineno));
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

VectorFormat vector_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".f64" || ext == ".bin") return VectorFormat::kF64;
  if (ext == ".f32") return VectorFormat::kF32;
  if (ext == ".txt" || ext == ".csv") return VectorFormat::kText;
  format_error(path, "unknown vector file extension '" + ext + "'");
}

std::vector<double> read_vector(const std::filesystem::path& path) {
  const VectorFormat fmt = vector_format(path);
  const std::string bytes = slurp(path);
  switch (fmt) {
    case VectorFormat::kF64: {
      const auto words = words_of<std::uint64_t>(path, bytes);
      std::vector<double> out(words.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::bit_cast<double>(words[i]);
      }
      return out;
    }
    case VectorFormat::kF32: {
      const auto words = words_of<std::uint32_t>(path, bytes);
      std::vector<double> out(words.size());
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = std::bit_cast<float>(words[i]);
      }
      return out;
    }
    case VectorFormat::kText:
      return parse_text_column<double>(path, bytes);
  }
  return {};
}

void write_vector(const std::filesystem::path& path,
                  std::span<const double> values) {
  switch (vector_format(path)) {
    case VectorFormat::kF64: {
      std::vector<std::uint64_t> words(values.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        words[i] = std::bit_cast<std::uint64_t>(values[i]);
      }
      spill(path, bytes_of<std::uint64_t>(words));
      return;
    }
    case VectorFormat::kF32: {
      std::vector<std::uint32_t> words(values.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        words[i] = std::bit_cast<std::uint32_t>(static_cast<float>(values[i]));
      }
      spill(path, bytes_of<std::uint32_t>(words));
      return;
    }
    case VectorFormat::kText: {
      std::ostringstream os;
      os.precision(17);
      for (double v : values) os << v << '\n';
      spill(path, os.str());
      return;
    }
  }
}

WeightedColumns read_weighted_text(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  WeightedColumns out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    double v = 0, w = 0;
    std::string extra;
    if (!(ls >> v >> w) || (ls >> extra)) {
      format_error(path, "expected 'value weight' on line " +
                             std::to_string(lineno));
    }
    out.values.push_back(v);
    out.weights.push_back(w);
  }
  return out;
}

std::vector<Index> read_indices(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  const std::string bytes = slurp(path);
  if (ext == ".u32") return words_of<Index>(path, bytes);
  if (ext == ".txt") return parse_text_column<Index>(path, bytes);
  format_error(path, "unknown index file extension '" + ext + "'");
}

void write_indices(const std::filesystem::path& path,
                   std::span<const Index> indices) {
  const auto ext = path.extension().string();
  if (ext == ".u32") {
    spill(path, bytes_of<Index>(indices));
  } else if (ext == ".txt") {
    std::ostringstream os;
    for (Index i : indices) os << i << '\n';
    spill(path, os.str());
  } else {
    format_error(path, "unknown index file extension '" + ext + "'");
  }
}

std::string codebook_to_json(const CodebookFile& file) {
  nlohmann::ordered_json j;
  j["levels"] = file.codebook.levels;
  j["expected_mse"] = file.codebook.expected_mse;
  j["algorithm"] = file.algorithm;
  j["d"] = file.d;
  j["s"] = file.s;
  j["m"] = file.m;
  j["seed"] = file.seed;
  j["dp_objective"] = file.dp_objective;
  j["solve_time"] = file.solve_time;
  return j.dump(2) + "\n";
}

CodebookFile codebook_from_json(const std::string& text) {
  CodebookFile f;
  try {
    const auto j = nlohmann::json::parse(text);
    f.codebook = Codebook::make(j.at("levels").get<std::vector<double>>(),
                                j.value("expected_mse", 0.0));
    f.algorithm = j.value("algorithm", std::string{});
    f.d = j.value("d", std::size_t{0});
    f.s = j.value("s", 0);
    f.m = j.value("m", Index{0});
    f.seed = j.value("seed", std::uint64_t{0});
    f.dp_objective = j.value("dp_objective", 0.0);
    f.solve_time = j.value("solve_time", 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kBadParameters,
                std::string("malformed codebook: ") + e.what());
  }
  if (f.codebook.levels.empty()) {
    throw Error(ErrorCode::kBadParameters, "codebook has no levels");
  }
  validate_finite(f.codebook.levels);
  return f;
}

void write_codebook(const std::filesystem::path& path,
                    const CodebookFile& file) {
  spill(path, codebook_to_json(file));
}

CodebookFile read_codebook(const std::filesystem::path& path) {
  return codebook_from_json(slurp(path));
}

}  // namespace asq
