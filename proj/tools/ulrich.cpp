#include "ulrich/app/commands.hpp"

int main(int argc, char** argv) { return ulrich::app::runMain(argc, argv); }
