#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dqg/conllu.hpp"
#include "dqg/errors.hpp"

namespace dqg {

struct TrainParams {
    enum class Arch { Cbow, SkipGram };

    Arch architecture = Arch::Cbow;
    int window = 8;
    int dim = 100;
    int negative = 5;
    int epochs = 5;
    float initial_lr = 0.025f;
    int min_count = 5;
    uint64_t seed = 1;
    int workers = 1;

    void validate() const;  // throws std::invalid_argument
    bool operator==(const TrainParams&) const = default;
};

struct VocabEntry {
    std::string key;
    uint64_t count = 0;

    bool operator==(const VocabEntry&) const = default;
};

struct Vocabulary {
    std::vector<VocabEntry> entries;               // descending count, lexicographic tie-break
    std::unordered_map<std::string, uint32_t> index;  // key -> row

    size_t size() const { return entries.size(); }
    const uint32_t* find(std::string_view key) const;
};

struct EmbeddingModel {
    Vocabulary vocab;
    uint32_t dim = 0;
    std::vector<float> input;   // |V| x dim, row-major
    std::vector<float> output;  // |V| x dim, row-major
    TrainParams params;

    std::span<const float> input_row(uint32_t row) const { return {input.data() + size_t(row) * dim, dim}; }
    std::span<float> input_row(uint32_t row) { return {input.data() + size_t(row) * dim, dim}; }
    std::span<const float> output_row(uint32_t row) const { return {output.data() + size_t(row) * dim, dim}; }
    std::span<float> output_row(uint32_t row) { return {output.data() + size_t(row) * dim, dim}; }

    /// Row for `key`, or throws MissingWordError.
    uint32_t row_of(std::string_view key) const;
};

/// Counts lemma_pos keys over the corpus and drops keys below min_count.
/// Throws std::runtime_error when nothing survives the filter.
Vocabulary build_vocab(const std::vector<AnnotatedSentence>& corpus, int min_count);

/// CBOW (default) or skip-gram with negative sampling. Deterministic for
/// workers = 1 and a fixed seed.
EmbeddingModel train(const std::vector<AnnotatedSentence>& corpus, const TrainParams& params);

/// Cosine similarity of the input-matrix rows of two vocabulary keys.
double similarity(const EmbeddingModel& model, std::string_view a, std::string_view b);

struct Scored {
    std::string key;
    double score;

    bool operator==(const Scored&) const = default;
};

/// Cosine ranking against the mean of unit-normalized query vectors
/// (positive minus negative); query keys are excluded from the result.
std::vector<Scored> most_similar(const EmbeddingModel& model, const std::vector<std::string>& positive,
                                 const std::vector<std::string>& negative = {}, size_t topn = 10);

/// The listed word least similar to the mean of all listed words' vectors.
std::string doesnt_match(const EmbeddingModel& model, const std::vector<std::string>& words);

void save_model(const EmbeddingModel& model, const std::string& path);
EmbeddingModel load_model(const std::string& path);

}  // namespace dqg
