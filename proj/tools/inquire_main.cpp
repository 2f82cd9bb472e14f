// inquire: serve the gated feedback API, or render a saved session log.
//
//   inquire [serve] [--guide FILE] [--bind HOST:PORT] [--model NAME]
//                   [--static-dir DIR] [--mock-responses FILE]
//   inquire export SESSION.json [-o OUT.html]

#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "inquire/error.hpp"
#include "inquire/feedback_service.hpp"
#include "inquire/http_server.hpp"
#include "inquire/llm_gateway.hpp"
#include "inquire/session_export.hpp"

namespace {

inquire::HttpServer* g_server = nullptr;

void handle_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::shared_ptr<inquire::LlmProvider> make_provider(const std::string& mock_path) {
  if (mock_path.empty()) return std::make_shared<inquire::GeminiProvider>();

  const auto text = read_file(mock_path);
  if (!text) throw std::runtime_error("cannot read " + mock_path);
  const auto doc = nlohmann::json::parse(*text);
  auto mock = std::make_shared<inquire::MockProvider>();
  for (const auto& item : doc) mock->push_response(item.get<std::string>());
  spdlog::warn("using scripted mock provider with {} responses", mock->remaining());
  return mock;
}

int run_serve(inquire::ServiceConfig config, const std::string& mock_path) {
  try {
    const inquire::FeedbackService service(config, make_provider(mock_path));
    const auto [host, port] = inquire::parse_bind_address(config.bind_address);

    inquire::HttpServer server(service);
    if (!server.bind(host, port)) {
      spdlog::error("cannot bind {}", config.bind_address);
      return 1;
    }
    g_server = &server;
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);

    spdlog::info("listening on {} (model {})", config.bind_address, config.model_name);
    server.listen_after_bind();
    g_server = nullptr;
    return 0;
  } catch (const inquire::Error& e) {
    spdlog::error("startup failed: {}: {}", inquire::to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    spdlog::error("startup failed: {}", e.what());
  }
  return 1;
}

int run_export(const std::string& input, const std::string& output) {
  const auto text = read_file(input);
  if (!text) {
    std::cerr << "error: cannot read " << input << "\n";
    return 1;
  }
  try {
    const auto html = inquire::render_session_html(inquire::parse_session_log(*text));
    if (output.empty()) {
      std::cout << html;
      return 0;
    }
    std::ofstream out(output, std::ios::binary);
    out << html;
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return 1;
    }
    return 0;
  } catch (const inquire::Error& e) {
    std::cerr << "error: " << inquire::to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inquiry-only argumentative writing feedback service"};
  app.require_subcommand(0, 1);

  auto config = inquire::ServiceConfig::from_env();
  std::string guide = config.guide_path.string();
  std::string static_dir = config.static_dir ? config.static_dir->string() : "";
  std::string mock_path;

  auto* serve = app.add_subcommand("serve", "Run the HTTP service (default)");
  serve->add_option("--guide", guide, "Pedagogy guide path (GUIDE_PATH)");
  serve->add_option("--bind", config.bind_address, "host:port to listen on (BIND_ADDR)");
  serve->add_option("--model", config.model_name, "Provider model name (MODEL_NAME)");
  serve->add_option("--static-dir", static_dir, "Directory with index.html/demo.html (STATIC_DIR)");
  serve->add_option("--mock-responses", mock_path,
                    "JSON array of scripted provider replies; runs fully offline");

  std::string session_path;
  std::string output_path;
  auto* exporter = app.add_subcommand("export", "Render a session log JSON file to HTML");
  exporter->add_option("session", session_path, "Session log JSON")->required();
  exporter->add_option("-o,--output", output_path, "Output HTML file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  if (exporter->parsed()) return run_export(session_path, output_path);

  config.guide_path = guide;
  if (!static_dir.empty()) config.static_dir = static_dir;
  return run_serve(std::move(config), mock_path);
}
