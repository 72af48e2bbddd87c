#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace forge::gateway {

// A registered prompt with named {slot} placeholders. Literal braces that do
// not spell a declared slot name (e.g. JSON examples embedded in the prompt)
// pass through rendering untouched.
struct PromptTemplate {
    std::string id;
    std::string text;
    std::vector<std::string> slots;
    bool json_output = false;
    double temperature = 0.0;
    int max_output_tokens = 2048;
};

// A rendered, ready-to-send prompt.
struct PromptBundle {
    std::string template_id;
    std::string rendered_text;
    std::map<std::string, std::string> slots;
    int max_output_tokens = 2048;
    double temperature = 0.0;
    bool json_output = false;

    // Digest of the rendered text alone; cache keys add model + params.
    std::string digest() const;
};

class TemplateRegistry {
public:
    // All built-in templates (both target dialects).
    static const TemplateRegistry& builtin();

    void add(PromptTemplate t);
    bool has(std::string_view id) const;
    const PromptTemplate& get(std::string_view id) const;  // UnknownTemplate
    std::vector<std::string> ids() const;

private:
    std::map<std::string, PromptTemplate, std::less<>> templates_;
};

// Fills every declared slot and checks nothing that looks like a placeholder
// remains. Errors: MissingSlot, UnknownSlot, UnfilledPlaceholder.
PromptBundle render_prompt(const PromptTemplate& tmpl,
                           const std::map<std::string, std::string>& slots);

// Convenience: lookup in the built-in registry, then render.
PromptBundle render_prompt(std::string_view template_id,
                           const std::map<std::string, std::string>& slots);

// Template id helpers ("mt.translate.egy" etc.). lang must be egy or mor.
std::string translate_template_id(std::string_view lang);
std::string translate_json_template_id(std::string_view lang);
std::string arabizi_template_id(std::string_view lang);
std::string generation_template_id(std::string_view lang);
std::string cultural_qa_template_id(std::string_view lang);

} // namespace forge::gateway
