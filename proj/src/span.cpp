// propspan/span.cpp

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

#include "propspan/span.hpp"

#include <algorithm>
#include <stdexcept>

namespace propspan {

std::int64_t overlap_length(const CharSpan& a, const CharSpan& b) {
  const std::int64_t lo = std::max(a.begin, b.begin);
  const std::int64_t hi = std::min(a.end, b.end);
  return std::max<std::int64_t>(0, hi - lo);
}

TechniqueLabel::TechniqueLabel(std::string name) : name_(std::move(name)) {
  if (name_.empty()) {
    throw std::invalid_argument("technique name must be non-empty");
  }
  if (name_.find('\t') != std::string::npos ||
      name_.find('\n') != std::string::npos) {
    throw std::invalid_argument("technique name '" + name_ +
                                "' contains a tab or newline");
  }
}

LabelInventory::LabelInventory(std::vector<TechniqueLabel> labels)
    : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) {
        throw std::invalid_argument("duplicate technique '" +
                                    labels_[i].name() + "' in inventory");
      }
    }
  }
}

LabelInventory LabelInventory::builtin() {
  return LabelInventory({
      TechniqueLabel("Loaded_Language"),
      TechniqueLabel("Appeal_to_Authority"),
      TechniqueLabel("Slogans"),
      TechniqueLabel("Straw_Man"),
      TechniqueLabel("Ad_Hominem"),
      TechniqueLabel("Red_Herring"),
  });
}

bool LabelInventory::contains(const TechniqueLabel& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::optional<std::size_t> LabelInventory::token_class(
    const TechniqueLabel& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i + 1;
  }
  return std::nullopt;
}

void LabelInventory::add(const TechniqueLabel& label) {
  if (!contains(label)) labels_.push_back(label);
}

Fragment::Fragment(std::string article_id_in, TechniqueLabel label_in,
                   std::int64_t begin, std::int64_t end)
    : article_id(std::move(article_id_in)),
      label(std::move(label_in)),
      span{begin, end} {
  if (begin < 0) {
    throw std::invalid_argument("fragment begin must be non-negative, got " +
                                std::to_string(begin));
  }
  if (begin >= end) {
    throw std::invalid_argument("fragment must be non-empty: begin " +
                                std::to_string(begin) + " >= end " +
                                std::to_string(end));
  }
}

std::int64_t overlap_length(const Fragment& a, const Fragment& b) {
  if (a.article_id != b.article_id) {
    throw std::invalid_argument("cannot overlap fragments of articles '" +
                                a.article_id + "' and '" + b.article_id + "'");
  }
  return overlap_length(a.span, b.span);
}

std::map<std::string, std::vector<std::size_t>> AnnotationSet::by_article()
    const {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < fragments_.size(); ++i) {
    groups[fragments_[i].article_id].push_back(i);
  }
  return groups;
}

AnnotationSet AnnotationSet::restricted_to(const TechniqueLabel& label) const {
  AnnotationSet out;
  for (const Fragment& f : fragments_) {
    if (f.label == label) out.add(f);
  }
  return out;
}

AnnotationSet AnnotationSet::restricted_to_article(
    const std::string& article_id) const {
  AnnotationSet out;
  for (const Fragment& f : fragments_) {
    if (f.article_id == article_id) out.add(f);
  }
  return out;
}

bool operator==(const AnnotationSet& a, const AnnotationSet& b) {
  if (a.size() != b.size()) return false;
  std::vector<Fragment> lhs = a.fragments_;
  std::vector<Fragment> rhs = b.fragments_;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

SentenceIndex::SentenceIndex(std::string article_id,
                             std::vector<CharSpan> sentences)
    : article_id_(std::move(article_id)), sentences_(std::move(sentences)) {
  for (std::size_t i = 0; i < sentences_.size(); ++i) {
    if (sentences_[i].begin < 0 ||
        sentences_[i].begin >= sentences_[i].end) {
      throw std::invalid_argument("sentence " + std::to_string(i) +
                                  " is empty or negative");
    }
    if (i > 0 && sentences_[i].begin < sentences_[i - 1].end) {
      throw std::invalid_argument("sentence " + std::to_string(i) +
                                  " overlaps or precedes its predecessor");
    }
  }
}

AnnotationSet fragment_from_token_run(
    const std::string& article_id, const std::vector<CharSpan>& token_spans,
    const std::vector<std::size_t>& token_classes,
    const LabelInventory& inventory) {
  if (token_spans.size() != token_classes.size()) {
    throw std::invalid_argument(
        "token spans and labels differ in length: " +
        std::to_string(token_spans.size()) + " vs " +
        std::to_string(token_classes.size()));
  }
  for (std::size_t i = 0; i < token_spans.size(); ++i) {
    if (token_spans[i].begin < 0 || token_spans[i].length() <= 0) {
      throw std::invalid_argument("token span " + std::to_string(i) +
                                  " is empty or negative");
    }
    if (i > 0 && token_spans[i].begin < token_spans[i - 1].end) {
      throw std::invalid_argument("token spans must be sorted and "
                                  "non-overlapping");
    }
    if (token_classes[i] >= inventory.num_token_classes()) {
      throw std::invalid_argument("token class " +
                                  std::to_string(token_classes[i]) +
                                  " outside the inventory");
    }
  }

  AnnotationSet out;
  std::size_t i = 0;
  while (i < token_spans.size()) {
    const std::size_t cls = token_classes[i];
    if (cls == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < token_spans.size() && token_classes[j + 1] == cls) ++j;
    out.add(Fragment(article_id, inventory.at(cls - 1), token_spans[i].begin,
                     token_spans[j].end));
    i = j + 1;
  }
  return out;
}

}  // namespace propspan
