#pragma once

#include <memory>
#include <string>

#include "inquire/feedback_service.hpp"

namespace inquire {

/// HTTP transport in front of a FeedbackService. The service must outlive
/// the server.
class HttpServer {
 public:
  explicit HttpServer(const FeedbackService& service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to an ephemeral port and returns it, or -1 on failure.
  int bind_any_port(const std::string& host);
  bool bind(const std::string& host, int port);

  /// Blocks until stop() is called.
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace inquire
