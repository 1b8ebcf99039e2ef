import sys

LOG_TYPES = ["LOG", "ERROR", "WARNING", "INFO", "DEBUG", "OUTPUT"]


class Logger(object):
    """
    Default logger for the sweep and enumeration classes of the
    subcubic_matching module.  Keeps every line in memory so a run can be
    inspected afterwards, and echoes selected log types to a stream.
    """
    def __init__(self, stream=None):
        self.log_entries = list()
        self.stream = stream
        self.log_type_to_stdout = dict()
        self.log_type_to_stdout['OUTPUT'] = True

    def log(self, message, log_type="LOG"):
        for line in str(message).split('\n'):
            self.log_entries.append((log_type, line))
            if self.log_type_to_stdout.get(log_type, False):
                stream = self.stream if self.stream is not None else sys.stdout
                stream.write(line + "\n")

    def error(self, message):
        self.log(message, 'ERROR')

    def warning(self, message):
        self.log(message, 'WARNING')

    def info(self, message):
        self.log(message, 'INFO')

    def debug(self, message):
        self.log(message, 'DEBUG')

    def output(self, message):
        self.log(message, 'OUTPUT')

    def get(self, log_type=None):
        lines = []
        for entry_type, line in self.log_entries:
            if log_type is None or entry_type == log_type:
                lines.append("%s: %s" % (entry_type, line))

        return '\n'.join(lines)

    def count(self, log_type):
        return len([x for x in self.log_entries if x[0] == log_type])

    def set_to_stdout(self, log_type, enabled=True):
        self.log_type_to_stdout[log_type] = enabled
