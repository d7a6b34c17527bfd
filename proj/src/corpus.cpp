#include "cicl/corpus.hpp"

#include <fstream>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "cicl/errors.hpp"
#include "cicl/rng.hpp"
#include "cicl/text.hpp"

namespace cicl::corpus {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string to_string(Origin o) { return o == Origin::human ? "human" : "generated"; }

std::string to_string(Platform p) {
    switch (p) {
        case Platform::stackexchange: return "stackexchange";
        case Platform::reddit: return "reddit";
        case Platform::synthetic: return "synthetic";
    }
    return "synthetic";
}

Origin origin_from_string(const std::string& s) {
    if (s == "human") return Origin::human;
    if (s == "generated") return Origin::generated;
    throw ValidationError("unknown origin: " + s);
}

Platform platform_from_string(const std::string& s) {
    if (s == "stackexchange") return Platform::stackexchange;
    if (s == "reddit") return Platform::reddit;
    if (s == "synthetic") return Platform::synthetic;
    throw ValidationError("unknown platform: " + s);
}

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         std::size_t line_no, const std::string& what) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.contains(it.key())) {
            throw ParseError("unknown field \"" + it.key() + "\" in " + what, line_no);
        }
    }
}

const json& require_field(const json& obj, const char* key, std::size_t line_no) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(std::string("missing field \"") + key + "\"", line_no);
    }
    return *it;
}

std::string require_string(const json& obj, const char* key, std::size_t line_no) {
    const json& v = require_field(obj, key, line_no);
    if (!v.is_string()) {
        throw ParseError(std::string("field \"") + key + "\" must be a string", line_no);
    }
    return v.get<std::string>();
}

AnswerRecord answer_from_json(const json& a, std::size_t line_no, bool strict) {
    if (!a.is_object()) throw ParseError("answer must be an object", line_no);
    if (strict) {
        reject_unknown_keys(a, {"id", "text", "score", "origin", "created_rank"},
                            line_no, "answer");
    }
    AnswerRecord rec;
    rec.id = require_string(a, "id", line_no);
    rec.text = normalize_whitespace(require_string(a, "text", line_no));
    const json& score = require_field(a, "score", line_no);
    if (!score.is_number_integer()) {
        throw ParseError("field \"score\" must be an integer", line_no);
    }
    rec.score = score.get<std::int64_t>();
    rec.origin = origin_from_string(require_string(a, "origin", line_no));
    const json& rank = require_field(a, "created_rank", line_no);
    if (!rank.is_number_unsigned() && !(rank.is_number_integer() && rank.get<std::int64_t>() >= 0)) {
        throw ParseError("field \"created_rank\" must be a non-negative integer", line_no);
    }
    rec.created_rank = rank.get<std::uint64_t>();
    if (rec.text.empty()) {
        throw ValidationError("answer \"" + rec.id + "\" has empty text after normalization");
    }
    return rec;
}

}  // namespace

RawPost post_from_jsonl_line(const std::string& line, std::size_t line_no, bool strict) {
    json obj;
    try {
        obj = json::parse(line);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!obj.is_object()) throw ParseError("record must be a JSON object", line_no);
    if (strict) {
        reject_unknown_keys(obj, {"id", "title", "body", "platform", "answers"},
                            line_no, "post");
    }
    RawPost post;
    post.id = require_string(obj, "id", line_no);
    post.title = normalize_whitespace(require_string(obj, "title", line_no));
    if (post.title.empty()) {
        throw ValidationError("post \"" + post.id + "\" has empty title");
    }
    if (auto it = obj.find("body"); it != obj.end() && !it->is_null()) {
        if (!it->is_string()) throw ParseError("field \"body\" must be a string or null", line_no);
        post.body = normalize_whitespace(it->get<std::string>());
    }
    post.platform = platform_from_string(require_string(obj, "platform", line_no));
    const json& answers = require_field(obj, "answers", line_no);
    if (!answers.is_array()) throw ParseError("field \"answers\" must be an array", line_no);

    std::unordered_set<std::string> answer_ids;
    std::unordered_set<std::uint64_t> ranks;
    for (const json& a : answers) {
        AnswerRecord rec = answer_from_json(a, line_no, strict);
        if (!answer_ids.insert(rec.id).second) {
            throw ValidationError("post \"" + post.id + "\" has duplicate answer id \"" +
                                  rec.id + "\"");
        }
        if (!ranks.insert(rec.created_rank).second) {
            throw ValidationError("post \"" + post.id + "\" has duplicate created_rank " +
                                  std::to_string(rec.created_rank));
        }
        post.answers.push_back(std::move(rec));
    }
    return post;
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format, bool strict) {
    (void)format;  // canonical_jsonl is the only format
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus file: " + path.string());

    Corpus corpus;
    corpus.source_label = path.filename().string();
    std::unordered_set<std::string> post_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        RawPost post = post_from_jsonl_line(line, line_no, strict);
        if (!post_ids.insert(post.id).second) {
            throw ValidationError("duplicate post id \"" + post.id + "\"");
        }
        corpus.posts.push_back(std::move(post));
    }
    return corpus;
}

std::string post_to_jsonl_line(const RawPost& post) {
    ordered_json obj;
    obj["id"] = post.id;
    obj["title"] = post.title;
    if (post.body) {
        obj["body"] = *post.body;
    } else {
        obj["body"] = nullptr;
    }
    obj["platform"] = to_string(post.platform);
    ordered_json answers = ordered_json::array();
    for (const auto& a : post.answers) {
        ordered_json rec;
        rec["id"] = a.id;
        rec["text"] = a.text;
        rec["score"] = a.score;
        rec["origin"] = to_string(a.origin);
        rec["created_rank"] = a.created_rank;
        answers.push_back(std::move(rec));
    }
    obj["answers"] = std::move(answers);
    return obj.dump();
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write corpus file: " + path.string());
    for (const auto& post : corpus.posts) {
        out << post_to_jsonl_line(post) << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
}

Corpus filter_multi_answer(const Corpus& corpus, std::size_t min_answers) {
    if (min_answers < 2) throw ArgumentError("min_answers must be >= 2");
    Corpus out;
    out.source_label = corpus.source_label;
    for (const auto& post : corpus.posts) {
        if (post.answers.size() < min_answers) continue;
        std::set<std::int64_t> scores;
        for (const auto& a : post.answers) scores.insert(a.score);
        if (scores.size() < 2) continue;
        out.posts.push_back(post);
    }
    return out;
}

Corpus sample_eval_set(const Corpus& corpus, std::size_t n, std::uint64_t seed) {
    if (n > corpus.posts.size()) {
        throw ArgumentError("sample size " + std::to_string(n) +
                            " exceeds corpus size " + std::to_string(corpus.posts.size()));
    }
    SplitMix64 rng(seed);
    auto picked = sample_indices(corpus.posts.size(), n, rng);
    std::sort(picked.begin(), picked.end());
    Corpus out;
    out.source_label = corpus.source_label;
    out.posts.reserve(n);
    for (std::size_t i : picked) out.posts.push_back(corpus.posts[i]);
    return out;
}

ConstraintTask make_constraint_task(const RawPost& post, std::uint64_t seed) {
    auto words = eligible_constraint_words(post.title);
    if (words.size() < 5) {
        throw TaskSkipError("post \"" + post.id + "\" has only " +
                            std::to_string(words.size()) + " eligible words");
    }
    SplitMix64 rng(seed);
    auto picked = sample_indices(words.size(), 5, rng);
    ConstraintTask task;
    task.post_id = post.id;
    task.question_text = post.title;
    for (std::size_t i : picked) task.seed_words.push_back(words[i]);
    return task;
}

}  // namespace cicl::corpus
