#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cliquelab {

// Append-only symbol intern table shared by token sequences and alphabets.
class Vocab {
  public:
    int32_t intern(std::string_view name);
    int32_t find(std::string_view name) const;  // -1 if absent
    const std::string& name(int32_t id) const { return names_.at(size_t(id)); }
    int32_t size() const { return int32_t(names_.size()); }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int32_t> ids_;
};

using VocabPtr = std::shared_ptr<Vocab>;

struct TokenSeq {
    VocabPtr vocab;
    std::vector<int32_t> ids;

    size_t size() const { return ids.size(); }
    const std::string& name_at(size_t pos) const { return vocab->name(ids[pos]); }
    void push(std::string_view name) { ids.push_back(vocab->intern(name)); }
    void append_run(int32_t id, size_t count) { ids.insert(ids.end(), count, id); }
};

TokenSeq make_token_seq(VocabPtr vocab, const std::vector<std::string>& names);

// Token stream file format: whitespace-separated token names, wrapped at 64
// tokens per line on output.
TokenSeq parse_token_text(const std::string& text, VocabPtr vocab = nullptr);
std::string token_text(const TokenSeq& seq);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cliquelab
