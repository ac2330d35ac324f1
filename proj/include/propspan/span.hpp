// propspan/span.hpp

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

#ifndef PROPSPAN_SPAN_HPP_
#define PROPSPAN_SPAN_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace propspan {

// Half-open character interval [begin, end). Offsets count Unicode code
// points from the start of the article text.
struct CharSpan {
  std::int64_t begin = 0;
  std::int64_t end = 0;

  std::int64_t length() const { return end - begin; }

  friend auto operator<=>(const CharSpan&, const CharSpan&) = default;
};

// Size of the intersection of two half-open spans, in code points.
std::int64_t overlap_length(const CharSpan& a, const CharSpan& b);

// Name of one persuasion technique. Non-empty, and must survive the TSV
// wire format: no tab or newline characters.
class TechniqueLabel {
 public:
  explicit TechniqueLabel(std::string name);

  const std::string& name() const { return name_; }

  friend auto operator<=>(const TechniqueLabel&, const TechniqueLabel&) =
      default;

 private:
  std::string name_;
};

// Ordered set of distinct technique names. Token-level classifiers add one
// implicit "none" class, so an inventory of N techniques yields (N+1)-way
// token classification; class 0 is always "none".
class LabelInventory {
 public:
  LabelInventory() = default;
  explicit LabelInventory(std::vector<TechniqueLabel> labels);

  // The six techniques the toolkit ships with. Real corpora normally come
  // with their own, larger inventory file.
  static LabelInventory builtin();

  std::size_t size() const { return labels_.size(); }
  std::size_t num_token_classes() const { return labels_.size() + 1; }
  bool contains(const TechniqueLabel& label) const;

  // Token class of a technique (1-based; 0 is reserved for "none");
  // nullopt when the technique is not in the inventory.
  std::optional<std::size_t> token_class(const TechniqueLabel& label) const;

  const TechniqueLabel& at(std::size_t i) const { return labels_.at(i); }
  const std::vector<TechniqueLabel>& labels() const { return labels_; }

  // Appends a technique; no-op when already present.
  void add(const TechniqueLabel& label);

 private:
  std::vector<TechniqueLabel> labels_;
};

// One annotated fragment: a non-empty character span of an article carrying
// a technique label.
struct Fragment {
  Fragment(std::string article_id_in, TechniqueLabel label_in,
           std::int64_t begin, std::int64_t end);

  std::string article_id;
  TechniqueLabel label;
  CharSpan span;

  std::int64_t begin() const { return span.begin; }
  std::int64_t end() const { return span.end; }
  std::int64_t length() const { return span.length(); }

  friend auto operator<=>(const Fragment&, const Fragment&) = default;
};

// Overlap of two fragments of the same article, in code points. Throws
// std::invalid_argument when the fragments refer to different articles.
std::int64_t overlap_length(const Fragment& a, const Fragment& b);

// Multiset of fragments. Insertion order is preserved (the TSV writer emits
// it back), but equality is multiset equality.
class AnnotationSet {
 public:
  AnnotationSet() = default;
  explicit AnnotationSet(std::vector<Fragment> fragments)
      : fragments_(std::move(fragments)) {}

  void add(Fragment fragment) { fragments_.push_back(std::move(fragment)); }

  const std::vector<Fragment>& fragments() const { return fragments_; }
  std::size_t size() const { return fragments_.size(); }
  bool empty() const { return fragments_.empty(); }

  // Fragment indices grouped by article, in insertion order.
  std::map<std::string, std::vector<std::size_t>> by_article() const;

  AnnotationSet restricted_to(const TechniqueLabel& label) const;
  AnnotationSet restricted_to_article(const std::string& article_id) const;

  friend bool operator==(const AnnotationSet& a, const AnnotationSet& b);

 private:
  std::vector<Fragment> fragments_;
};

// Sentence decomposition of one article: non-empty, non-overlapping spans
// sorted by begin.
class SentenceIndex {
 public:
  SentenceIndex(std::string article_id, std::vector<CharSpan> sentences);

  const std::string& article_id() const { return article_id_; }
  const std::vector<CharSpan>& sentences() const { return sentences_; }
  std::size_t size() const { return sentences_.size(); }

 private:
  std::string article_id_;
  std::vector<CharSpan> sentences_;
};

// Collapses each maximal run of consecutive tokens sharing the same
// non-"none" class into one fragment spanning from the run's first token
// begin to its last token end. token_classes[i] == 0 ("none") emits
// nothing; class c >= 1 maps to inventory label c - 1. Gaps between
// consecutive tokens of a run are absorbed into the fragment.
AnnotationSet fragment_from_token_run(
    const std::string& article_id, const std::vector<CharSpan>& token_spans,
    const std::vector<std::size_t>& token_classes,
    const LabelInventory& inventory);

}  // namespace propspan

#endif  // PROPSPAN_SPAN_HPP_
