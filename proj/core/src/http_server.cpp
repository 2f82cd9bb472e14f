#include "inquire/http_server.hpp"

#include <httplib.h>

#include <spdlog/spdlog.h>

namespace inquire {

struct HttpServer::Impl {
  explicit Impl(const FeedbackService& svc) : service(svc) {
    auto send = [](httplib::Response& res, const HttpReply& reply) {
      res.status = reply.status;
      res.set_content(reply.body, reply.content_type);
    };

    server.Get(".*", [this, send](const httplib::Request& req, httplib::Response& res) {
      send(res, service.get(req.path));
    });
    server.Post(".*", [this, send](const httplib::Request& req, httplib::Response& res) {
      send(res, service.post(req.path, req.body));
    });
    server.set_exception_handler(
        [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
          HttpReply reply;
          try {
            std::rethrow_exception(ep);
          } catch (const std::exception& e) {
            reply = error_reply(e);
          } catch (...) {
            reply = {500, "application/json", R"({"error_code":"InternalError"})"};
          }
          res.status = reply.status;
          res.set_content(reply.body, reply.content_type);
        });
    server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
      spdlog::debug("{} {} -> {}", req.method, req.path, res.status);
    });
  }

  const FeedbackService& service;
  httplib::Server server;
};

HttpServer::HttpServer(const FeedbackService& service)
    : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() = default;

int HttpServer::bind_any_port(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpServer::bind(const std::string& host, int port) {
  return impl_->server.bind_to_port(host, port);
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace inquire
