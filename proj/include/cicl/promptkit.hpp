#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cicl/pairing.hpp"

namespace cicl::promptkit {

enum class Role { system, user, assistant };

std::string to_string(Role r);

struct PromptSegment {
    Role role = Role::user;
    std::string content;

    bool operator==(const PromptSegment&) const = default;
};

// An ordered sequence of role-tagged segments. Non-conversational profiles
// always produce a single user segment; conversational profiles end with a
// user segment.
struct RenderedPrompt {
    std::vector<PromptSegment> segments;
    std::string strategy_tag;
    std::size_t token_count = 0;  // filled by count_tokens / render_with_budget

    bool operator==(const RenderedPrompt&) const = default;
};

struct ModelProfile {
    std::string name;
    bool conversational = false;
    std::string platform_persona;  // "StackExchange", "Reddit", ...
    std::size_t max_prompt_tokens = 4096;
    std::size_t segment_overhead_tokens = 4;
};

enum class StrategyKind {
    zero_shot,
    few_shot,
    contrastive_examples,
    contrastive_instruction,
    contrastive_combined,
};

std::string to_string(StrategyKind k);
StrategyKind strategy_kind_from_string(const std::string& s);

struct PromptStrategy {
    StrategyKind kind = StrategyKind::zero_shot;
    std::size_t k = 0;  // demonstration inputs; 0 iff zero_shot, else 1..4
};

// Throws ArgumentError if kind/k violate the invariant.
void validate_strategy(const PromptStrategy& s);

// Counts tokens of one segment's content. The default rule is the word
// tokenizer in text.hpp; provider-native tokenizers may replace it.
using Tokenizer = std::function<std::size_t(const std::string&)>;
std::size_t default_token_count(const std::string& content);

// Uniform sample of k pairs without replacement (SplitMix64 + Fisher-Yates
// prefix over the pool after dropping exclude_post_id), in selection order.
std::vector<pairing::ContrastivePair> select_few_shot(
    const std::vector<pairing::ContrastivePair>& pool, std::size_t k,
    std::uint64_t seed, const std::string& exclude_post_id);

// The five strategy renders. Non-conversational profiles produce one flat
// user segment with "Question:" / "Answer:" style prefixes and end with an
// open prefix; conversational profiles produce role-tagged histories ending
// with a user segment.
RenderedPrompt render_zero_shot(const std::string& input_text,
                                const ModelProfile& profile);

RenderedPrompt render_few_shot(const std::string& input_text,
                               const std::vector<pairing::ContrastivePair>& examples,
                               const ModelProfile& profile);

RenderedPrompt render_contrastive_examples(
    const std::string& input_text,
    const std::vector<pairing::ContrastivePair>& pairs,
    const ModelProfile& profile);

// The analysis-eliciting prompt: lists each pair with "Preferred answer:" /
// "Less preferred answer:" labels and ends with the summarize instruction.
// Profile-independent; a single user segment.
RenderedPrompt render_instruction_request(
    const std::vector<pairing::ContrastivePair>& pairs);

// Final prompt of the instruction-only strategy: the distilled analysis plus
// "Generate a top-rated answer for: {input}". No contrastive example text.
RenderedPrompt render_instruction_only(const std::string& input_text,
                                       const std::string& instruction_analysis,
                                       const ModelProfile& profile);

// Contrastive examples with the analysis inserted: a system segment for
// conversational profiles, a paragraph before the final question otherwise.
RenderedPrompt render_combined(const std::string& input_text,
                               const std::vector<pairing::ContrastivePair>& pairs,
                               const std::string& instruction_analysis,
                               const ModelProfile& profile);

// Sum of tokenizer(content) over segments plus the profile's per-segment
// overhead (default 4).
std::size_t count_tokens(const RenderedPrompt& prompt, const ModelProfile& profile,
                         const Tokenizer& tokenizer = default_token_count);

// Render a strategy and enforce the profile token budget: whole example
// pairs are dropped from the front (oldest first) until the render fits.
// Throws ArgumentError when no examples remain and the prompt still
// exceeds the budget. Fills token_count.
RenderedPrompt render_with_budget(const PromptStrategy& strategy,
                                  const std::string& input_text,
                                  std::vector<pairing::ContrastivePair> pairs,
                                  const std::string& instruction_analysis,
                                  const ModelProfile& profile,
                                  const Tokenizer& tokenizer = default_token_count);

// Segment serialization used for golden fixtures and prompt digests:
// "### role\n" followed by the content and a newline, per segment.
std::string to_golden(const RenderedPrompt& prompt);

// Flat text for completion-style endpoints: the single segment's content,
// or contents joined by blank lines for multi-segment renders.
std::string flatten(const RenderedPrompt& prompt);

}  // namespace cicl::promptkit
