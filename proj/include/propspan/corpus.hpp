// propspan/corpus.hpp

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

#ifndef PROPSPAN_CORPUS_HPP_
#define PROPSPAN_CORPUS_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "propspan/span.hpp"

namespace propspan {

// One article: identifier, decoded text and its sentence decomposition.
struct Article {
  std::string id;
  std::u32string text;
  SentenceIndex sentences;
};

Article make_article(std::string id, std::string_view utf8_text);

// Sentences are the maximal non-empty newline-delimited segments of the
// text; spans exclude the terminating LF. Empty lines produce no sentence.
SentenceIndex build_sentence_index(const std::string& article_id,
                                   const std::u32string& text);

struct SpansParseOptions {
  // Strict mode rejects techniques outside the inventory; lenient mode
  // extends the inventory as new names are seen.
  bool strict = true;
};

// Parses span annotations, one fragment per non-empty line:
// article_id <TAB> technique <TAB> begin <TAB> end
// Offsets are code points, begin inclusive, end exclusive. Errors carry the
// 1-based line number.
AnnotationSet parse_spans_file(std::string_view content,
                               LabelInventory& inventory,
                               const SpansParseOptions& options = {});

// Inverse of parse_spans_file, preserving fragment order. LF line endings.
std::string serialize_spans(const AnnotationSet& annotations);

// Inventory file: one technique name per line, blank lines ignored.
LabelInventory parse_inventory(std::string_view content);

// Sentence i is positive iff some fragment overlaps it by at least one
// character. Fragments belonging to other articles are ignored.
std::vector<bool> derive_slc_labels(const AnnotationSet& annotations,
                                    const SentenceIndex& index);

struct CorpusStats {
  std::size_t num_articles = 0;
  std::size_t num_sentences = 0;
  std::size_t num_fragments = 0;
  // Positive sentences / total sentences; 0 when there are no sentences.
  double fraction_positive_sentences = 0.0;
  std::map<std::string, std::size_t> per_technique;
};

// Counts over the given articles and gold annotations. Every inventory
// technique gets a row, plus any extra technique present in the gold set.
// Throws std::invalid_argument when a fragment references an unknown
// article.
CorpusStats compute_stats(const std::vector<Article>& articles,
                          const AnnotationSet& gold,
                          const LabelInventory& inventory);

// Split manifest: one article_id per line, blank lines ignored.
std::set<std::string> parse_split_manifest(std::string_view content);

struct CorpusSplit {
  std::string name;
  std::set<std::string> article_ids;
};

// The train/dev/test splits must be pairwise disjoint.
void validate_splits(const std::vector<CorpusSplit>& splits);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Loads every *.txt file of the directory as one article; the article_id is
// the file name stem. Articles come back sorted by id.
std::vector<Article> load_articles_dir(const std::filesystem::path& dir);

}  // namespace propspan

#endif  // PROPSPAN_CORPUS_HPP_
