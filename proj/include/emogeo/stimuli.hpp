#pragma once

// The 21-emotion vocabulary, comprehension passages, neutral baseline
// sentences and generation story templates.

#include "emogeo/common.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace emogeo {

class EmotionVocabulary {
public:
    static const EmotionVocabulary& canonical();

    const std::vector<std::string>& labels() const { return labels_; }
    bool contains(const std::string& label) const;
    int index_of(const std::string& label) const;  // -1 if absent

private:
    explicit EmotionVocabulary(std::vector<std::string> labels);
    std::vector<std::string> labels_;
};

// The 20-label generation vocabulary: the main set with "neutral" removed.
std::vector<std::string> generation_subset(const EmotionVocabulary& vocab);

struct CorpusBundle {
    std::map<std::string, std::vector<std::string>> passages;  // emotion -> texts
    std::vector<std::string> neutral_sentences;                // exactly 20
    std::vector<std::string> story_templates;                  // exactly 5, "{emotion}" slot
    std::vector<std::string> neutral_stories;                  // exactly 10
    std::string steering_prompt;
    bool templates_are_standins = false;

    void validate() const;
    std::string content_hash() const;
    int passage_count() const;
};

CorpusBundle load_corpus(const std::filesystem::path& passages_csv,
                         const std::filesystem::path& neutral_txt,
                         const std::filesystem::path& templates_json);

// Substitutes the emotion label into a story template's {emotion} slot.
std::string instantiate_template(const std::string& story_template, const std::string& emotion);

} // namespace emogeo
