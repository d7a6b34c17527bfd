#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cicl::corpus {

enum class Origin { human, generated };
enum class Platform { stackexchange, reddit, synthetic };

std::string to_string(Origin o);
std::string to_string(Platform p);
Origin origin_from_string(const std::string& s);
Platform platform_from_string(const std::string& s);

struct AnswerRecord {
    std::string id;
    std::string text;
    std::int64_t score = 0;
    Origin origin = Origin::human;
    std::uint64_t created_rank = 0;

    bool operator==(const AnswerRecord&) const = default;
};

struct RawPost {
    std::string id;
    std::string title;
    std::optional<std::string> body;  // stored for provenance, never rendered
    Platform platform = Platform::synthetic;
    std::vector<AnswerRecord> answers;

    bool operator==(const RawPost&) const = default;
};

struct Corpus {
    std::vector<RawPost> posts;
    std::string source_label;

    bool operator==(const Corpus&) const = default;
};

struct ConstraintTask {
    std::string post_id;
    std::string question_text;
    std::vector<std::string> seed_words;  // exactly 5, lowercase, distinct

    bool operator==(const ConstraintTask&) const = default;
};

enum class CorpusFormat { canonical_jsonl };

// Load a canonical JSONL corpus. Text fields are whitespace-normalized on
// the way in. Strict mode rejects unknown fields.
// Throws ParseError (with line number) on malformed lines, ValidationError
// on duplicate ids or invariant breaks, IoError if the file cannot be read.
Corpus load_corpus(const std::filesystem::path& path,
                   CorpusFormat format = CorpusFormat::canonical_jsonl,
                   bool strict = true);

// Canonical serialization; load_corpus(write_corpus(c)) == c.
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);
std::string post_to_jsonl_line(const RawPost& post);
RawPost post_from_jsonl_line(const std::string& line, std::size_t line_no,
                             bool strict = true);

// Keep posts with at least min_answers answers AND at least two distinct
// score values; order preserved. min_answers must be >= 2.
Corpus filter_multi_answer(const Corpus& corpus, std::size_t min_answers);

// Uniform sample of n posts without replacement (SplitMix64 + Fisher-Yates
// prefix), returned in original corpus order.
Corpus sample_eval_set(const Corpus& corpus, std::size_t n, std::uint64_t seed);

// Pick 5 distinct eligible words from the post title (seeded). Throws
// TaskSkipError when fewer than 5 eligible words exist.
ConstraintTask make_constraint_task(const RawPost& post, std::uint64_t seed);

}  // namespace cicl::corpus
