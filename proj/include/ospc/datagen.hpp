#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ospc/backends.hpp"
#include "ospc/image.hpp"
#include "ospc/pipeline.hpp"
#include "ospc/types.hpp"
#include "ospc/util.hpp"

namespace ospc {

enum class Script { latin, han, tamil };
Script script_for(Language lang);  // unknown has no script -> precondition

// Procedural glyph face: every codepoint maps to a seeded 7x7 bit pattern,
// scaled by nearest neighbor. Rendering is therefore byte-deterministic and
// needs no font files; coverage is declared per script so unsupported
// scripts can be rejected.
class SynthFont {
public:
    SynthFont(std::string id, uint64_t seed, std::vector<Script> coverage);

    static constexpr int kGrid = 7;           // glyph cell grid
    static constexpr int kAdvanceCells = 8;   // glyph width + 1 cell gap

    const std::string& id() const { return id_; }
    bool covers(Script script) const;
    // 49-bit pattern, row-major; all zero for whitespace.
    std::array<bool, kGrid * kGrid> glyph(char32_t cp) const;

private:
    std::string id_;
    uint64_t seed_;
    std::vector<Script> coverage_;
};

class FontRegistry {
public:
    void add(SynthFont font);
    std::vector<const SynthFont*> fonts_for(Script script) const;
    const SynthFont* find(const std::string& id) const;
    // Four built-in faces covering latin, han, and tamil.
    static FontRegistry builtin();

private:
    std::vector<SynthFont> fonts_;
};

struct Placement {
    int x = 0;
    int y = 0;
    std::string font_id;
    int size_pt = 0;
    std::array<uint8_t, 3> color{0, 0, 0};
    OcrBox box;  // actual rendered bounds
};

struct SynthSample {
    Image image;
    std::string text;
    Language language = Language::english;
    Placement placement;
    std::string background_id;  // "proc:<hex seed>" for the procedural provider
    uint64_t seed = 0;
    std::string image_path;  // manifest-relative, set by build_ocr_dataset
};

class BackgroundProvider {
public:
    virtual ~BackgroundProvider() = default;
    virtual Image background(uint64_t seed, int width, int height) = 0;
    virtual std::string id_for(uint64_t seed) const;
};

// Default provider: solid fills, two-color gradients, and value noise,
// chosen and parameterized from the seed.
class ProceduralBackgroundProvider : public BackgroundProvider {
public:
    Image background(uint64_t seed, int width, int height) override;
};

std::vector<Image> generate_backgrounds(int n, BackgroundProvider& provider, uint64_t seed,
                                        int width = 256, int height = 256);

struct StampOptions {
    int min_size_pt = 12;
    int max_size_pt = 48;
    int max_attempts = 50;   // size rejection budget before shrink-to-fit
    int min_contrast = 60;   // minimum |luma(text) - luma(region mean)|, 0..255
};

// Prints `line` onto a copy of the background at a seeded random placement:
// size uniform in [min,max] pt with rejection until the rendered box fits
// (after max_attempts the size shrinks to the largest that fits, or
// text_too_long if none does), position uniform over the valid range, color
// resampled until it clears the contrast floor against the covered region.
SynthSample stamp_text(const Image& background, const std::string& line, Language language,
                       uint64_t seed, const FontRegistry& fonts, const StampOptions& opts = {});

struct DatasetOptions {
    int width = 256;
    int height = 256;
    int parallelism = 1;
    StampOptions stamp;
};

struct DatasetResult {
    std::vector<SynthSample> samples;  // deterministic order: language, then index
    std::string manifest_path;
};

// Builds n samples per language from verbatim corpus lines and writes
// images/ plus a JSONL manifest under out_dir. A pure function of
// (corpora, seed): manifests are byte-identical across reruns and
// parallelism levels because every sample derives its own RNG from the
// master seed and sample index.
DatasetResult build_ocr_dataset(const std::map<Language, std::string>& corpus_paths,
                                int n_per_language, const std::string& out_dir, uint64_t seed,
                                BackgroundProvider& provider, const FontRegistry& fonts,
                                const DatasetOptions& opts = {});

// Manifest row: {image, text, language, box, font, size, color, seed}.
std::string manifest_line(const SynthSample& sample);
std::vector<SynthSample> read_manifest(const std::string& path);  // images not loaded

struct ChatExample {
    std::string question;
    std::string answer;  // "Yes"/"No", then "\n" + rationale when present
};

// Validates the verdict ("Yes" or "No", exactly) and formats the answer.
ChatExample make_chat_example(std::string question, const AnnotatorVerdict& verdict);

// One chat example per meme: the question is the same prompt the scoring
// path would build (caption + OCR + language routing), the answer comes
// from the supplied annotator verdict.
std::vector<ChatExample> build_distill_dataset(
    const std::vector<std::pair<MemeInput, AnnotatorVerdict>>& memes, const BackendSet& backends,
    const PipelineConfig& cfg);

void write_chat_examples(const std::string& path, const std::vector<ChatExample>& examples);

}  // namespace ospc
