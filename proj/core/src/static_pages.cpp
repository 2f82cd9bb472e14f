#include "static_pages.hpp"

#include <fstream>
#include <sstream>

#include "inquire/demo_fixtures.hpp"
#include "inquire/session_export.hpp"

namespace inquire {

namespace {

std::optional<std::string> read_bundle_file(const std::optional<std::filesystem::path>& dir,
                                            const char* name) {
  if (!dir) return std::nullopt;
  std::ifstream in(*dir / name, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

constexpr std::string_view kHead =
    "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
    "<style>body{font-family:system-ui,sans-serif;max-width:46rem;margin:2rem auto;"
    "padding:0 1rem;line-height:1.5}blockquote{white-space:pre-wrap;border-left:4px solid "
    "rgba(250, 204, 21, 0.9);margin:0;padding:.5rem .75rem}code{background:#f0f4f8}</style>\n";

std::string builtin_app_page() {
  std::string out(kHead);
  out +=
      "<title>Argument feedback</title>\n</head>\n<body>\n<h1>Argument feedback service</h1>\n"
      "<p>The browser client is not installed on this server. Set <code>STATIC_DIR</code> to "
      "a directory containing <code>index.html</code> to serve it here.</p>\n"
      "<p>API: <code>POST /challenge</code>, <code>POST /unlock</code>, "
      "<code>POST /export</code>, <code>GET /demo/bundle</code>, <code>GET /healthz</code>.</p>\n"
      "</body>\n</html>\n";
  return out;
}

std::string builtin_demo_page() {
  const auto& bundle = get_demo_bundle();
  std::string out(kHead);
  out += "<title>Argument feedback demo</title>\n</head>\n<body>\n<h1>Demo essay</h1>\n";
  out += "<blockquote>" + html_escape(bundle.essay) + "</blockquote>\n";
  for (const auto& [persona, feedback] : bundle.feedback) {
    out += "<h2>";
    out += persona == PersonaId::reviewer2 ? "Reviewer #2" : "Confused Reader";
    out += "</h2>\n<ol>\n";
    for (const auto& card : feedback.cards) {
      out += "<li><strong>";
      out += to_string(card.label);
      out += "</strong> " + html_escape(card.question) + "</li>\n";
    }
    out += "</ol>\n";
  }
  out += "</body>\n</html>\n";
  return out;
}

}  // namespace

std::string app_page(const std::optional<std::filesystem::path>& static_dir) {
  if (auto page = read_bundle_file(static_dir, "index.html")) return *page;
  static const std::string page = builtin_app_page();
  return page;
}

std::string demo_page(const std::optional<std::filesystem::path>& static_dir) {
  if (auto page = read_bundle_file(static_dir, "demo.html")) return *page;
  static const std::string page = builtin_demo_page();
  return page;
}

}  // namespace inquire
