#include "synthtab/log.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace synthtab::log {

namespace {

std::mutex g_mutex;
Sink g_sink = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };

}  // namespace

Sink set_sink(Sink sink) {
    std::lock_guard<std::mutex> lock(g_mutex);
    Sink previous = std::move(g_sink);
    g_sink = std::move(sink);
    return previous;
}

void warn(const std::string& message) {
    Sink sink;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        sink = g_sink;
    }
    if (sink) sink(message);
}

}  // namespace synthtab::log
