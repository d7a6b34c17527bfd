#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cicl/corpus.hpp"

namespace cicl::llmgate {
class Gateway;
class GenerationProvider;
struct GenerationParams;
}  // namespace cicl::llmgate

namespace cicl::pairing {

enum class NegativeSource { labeled_feedback, llm_generated, auto_evaluator };

std::string to_string(NegativeSource s);
NegativeSource negative_source_from_string(const std::string& s);

// One input with a preferred and a less-preferred exemplar answer.
struct ContrastivePair {
    std::string post_id;
    std::string input_text;  // the post title
    corpus::AnswerRecord positive;
    corpus::AnswerRecord negative;
    NegativeSource negative_source = NegativeSource::labeled_feedback;

    bool operator==(const ContrastivePair&) const = default;
};

// A synthetic style axis; instructions are configuration data, not code.
struct StyleSpec {
    std::string name;  // e.g. "Funny vs. Serious"
    std::string positive_style_instruction;
    std::string negative_style_instruction;
};

// positive = highest-scored answer, negative = lowest-scored. Ties break by
// smaller created_rank, then lexicographically smaller id.
// Throws ArgumentError (< 2 answers) or NoSignalError (all scores equal).
ContrastivePair pair_from_feedback(const corpus::RawPost& post);

// Negative = the model's own zero-shot reply to the post, wrapped as a
// generated AnswerRecord with id "gen:<post id>".
ContrastivePair pair_from_generation(const corpus::RawPost& post,
                                     const corpus::AnswerRecord& positive,
                                     llmgate::Gateway& gateway,
                                     llmgate::GenerationProvider& provider,
                                     const llmgate::GenerationParams& params);

// positive = first candidate scoring 1 under the evaluator, negative = first
// scoring 0. Throws NoContrastError when either side is missing.
ContrastivePair pair_from_evaluator(
    const corpus::ConstraintTask& task,
    const std::vector<corpus::AnswerRecord>& candidates,
    const std::function<int(const std::string&)>& evaluator);

// Two generations, one per style instruction; the positive_style output is
// labeled positive. Both carry origin=generated.
ContrastivePair synthesize_style_pair(const corpus::RawPost& post,
                                      const StyleSpec& spec,
                                      llmgate::Gateway& gateway,
                                      llmgate::GenerationProvider& provider,
                                      const llmgate::GenerationParams& params);

// JSONL wire format, consumed by promptkit and runner.
std::string pair_to_jsonl_line(const ContrastivePair& pair);
ContrastivePair pair_from_jsonl_line(const std::string& line, std::size_t line_no);

}  // namespace cicl::pairing
