// propspan/corpus.cpp

// Copyright 2026  The Propspan Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "propspan/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "propspan/error.hpp"
#include "propspan/utf8.hpp"

namespace propspan {

namespace {

// Splits into lines on LF; the final segment counts as a line when
// non-empty (missing trailing newline).
std::vector<std::string_view> split_lines(std::string_view content) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    const std::size_t nl = content.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < content.size()) lines.push_back(content.substr(start));
      break;
    }
    lines.push_back(content.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::int64_t parse_offset(std::string_view field, std::size_t line_number,
                          const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(std::string(what) + " offset is not an integer: '" +
                         std::string(field) + "'",
                     line_number);
  }
  return value;
}

}  // namespace

Article make_article(std::string id, std::string_view utf8_text) {
  std::u32string text = decode_utf8(utf8_text);
  SentenceIndex index = build_sentence_index(id, text);
  return Article{std::move(id), std::move(text), std::move(index)};
}

SentenceIndex build_sentence_index(const std::string& article_id,
                                   const std::u32string& text) {
  std::vector<CharSpan> sentences;
  std::int64_t start = 0;
  const std::int64_t n = static_cast<std::int64_t>(text.size());
  for (std::int64_t i = 0; i <= n; ++i) {
    if (i == n || text[static_cast<std::size_t>(i)] == U'\n') {
      if (i > start) sentences.push_back(CharSpan{start, i});
      start = i + 1;
    }
  }
  return SentenceIndex(article_id, std::move(sentences));
}

AnnotationSet parse_spans_file(std::string_view content,
                               LabelInventory& inventory,
                               const SpansParseOptions& options) {
  AnnotationSet out;
  const std::vector<std::string_view> lines = split_lines(content);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    if (line.empty()) continue;
    const std::size_t line_number = li + 1;
    const std::vector<std::string_view> fields = split_fields(line);
    if (fields.size() != 4) {
      throw ParseError("expected 4 tab-separated fields, got " +
                           std::to_string(fields.size()),
                       line_number);
    }
    const std::string article_id(fields[0]);
    if (article_id.empty()) {
      throw ParseError("empty article_id", line_number);
    }
    TechniqueLabel label = [&] {
      try {
        return TechniqueLabel(std::string(fields[1]));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_number);
      }
    }();
    if (!inventory.contains(label)) {
      if (options.strict) {
        throw ParseError("unknown technique '" + label.name() + "'",
                         line_number);
      }
      inventory.add(label);
    }
    const std::int64_t begin = parse_offset(fields[2], line_number, "begin");
    const std::int64_t end = parse_offset(fields[3], line_number, "end");
    if (begin < 0) {
      throw ParseError("begin offset is negative", line_number);
    }
    if (begin >= end) {
      throw ParseError("begin " + std::to_string(begin) + " >= end " +
                           std::to_string(end),
                       line_number);
    }
    out.add(Fragment(article_id, std::move(label), begin, end));
  }
  return out;
}

std::string serialize_spans(const AnnotationSet& annotations) {
  std::string out;
  for (const Fragment& f : annotations.fragments()) {
    out += f.article_id;
    out += '\t';
    out += f.label.name();
    out += '\t';
    out += std::to_string(f.begin());
    out += '\t';
    out += std::to_string(f.end());
    out += '\n';
  }
  return out;
}

LabelInventory parse_inventory(std::string_view content) {
  LabelInventory inventory;
  const std::vector<std::string_view> lines = split_lines(content);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    if (lines[li].empty()) continue;
    TechniqueLabel label = [&] {
      try {
        return TechniqueLabel(std::string(lines[li]));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), li + 1);
      }
    }();
    if (inventory.contains(label)) {
      throw ParseError("duplicate technique '" + label.name() + "'", li + 1);
    }
    inventory.add(label);
  }
  return inventory;
}

std::vector<bool> derive_slc_labels(const AnnotationSet& annotations,
                                    const SentenceIndex& index) {
  std::vector<bool> labels(index.size(), false);
  for (const Fragment& f : annotations.fragments()) {
    if (f.article_id != index.article_id()) continue;
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (!labels[i] && overlap_length(f.span, index.sentences()[i]) > 0) {
        labels[i] = true;
      }
    }
  }
  return labels;
}

CorpusStats compute_stats(const std::vector<Article>& articles,
                          const AnnotationSet& gold,
                          const LabelInventory& inventory) {
  CorpusStats stats;
  stats.num_articles = articles.size();
  for (const TechniqueLabel& l : inventory.labels()) {
    stats.per_technique[l.name()] = 0;
  }

  std::map<std::string, const Article*> by_id;
  for (const Article& a : articles) by_id[a.id] = &a;

  std::size_t positive = 0;
  for (const Article& a : articles) {
    stats.num_sentences += a.sentences.size();
    const std::vector<bool> labels = derive_slc_labels(gold, a.sentences);
    positive += static_cast<std::size_t>(
        std::count(labels.begin(), labels.end(), true));
  }

  for (const Fragment& f : gold.fragments()) {
    if (by_id.find(f.article_id) == by_id.end()) {
      throw std::invalid_argument("fragment references unknown article '" +
                                  f.article_id + "'");
    }
    ++stats.num_fragments;
    ++stats.per_technique[f.label.name()];
  }

  stats.fraction_positive_sentences =
      stats.num_sentences == 0
          ? 0.0
          : static_cast<double>(positive) /
                static_cast<double>(stats.num_sentences);
  return stats;
}

std::set<std::string> parse_split_manifest(std::string_view content) {
  std::set<std::string> ids;
  for (std::string_view line : split_lines(content)) {
    if (!line.empty()) ids.insert(std::string(line));
  }
  return ids;
}

void validate_splits(const std::vector<CorpusSplit>& splits) {
  for (std::size_t i = 0; i < splits.size(); ++i) {
    for (std::size_t j = i + 1; j < splits.size(); ++j) {
      for (const std::string& id : splits[i].article_ids) {
        if (splits[j].article_ids.count(id) > 0) {
          throw std::invalid_argument("article '" + id + "' appears in both " +
                                      splits[i].name + " and " +
                                      splits[j].name + " splits");
        }
      }
    }
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + path.string());
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw std::invalid_argument("failed writing file: " + path.string());
  }
}

std::vector<Article> load_articles_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::invalid_argument("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Article> articles;
  articles.reserve(files.size());
  for (const auto& path : files) {
    try {
      articles.push_back(make_article(path.stem().string(), read_file(path)));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }
  return articles;
}

}  // namespace propspan
