#!/usr/bin/python3

# Basic check
import sys
if sys.version_info.major < 3:
    print("Ups! cbgraph needs to run with Python 3. It seems you launched it with Python 2. Try using: python3 run.py ... ")
    sys.exit(2)

from cbgraph import log
from cbgraph import config
from cbgraph import system
from cbgraph.arghelpers import args_to_dict

from stages.cb_app import CBApp


def main(argv=None):
    args = config.config(argv)
    log.logger.quiet = args.quiet

    log.CB_INFO('Initializing cbgraph %s - %s' % (config.__version__, system.now()))

    # Print args
    args_dict = args_to_dict(args)
    log.CB_INFO('==============')
    for k in args_dict.keys():
        log.CB_INFO('%s: %s' % (k, args_dict[k]))
    log.CB_INFO('==============')

    app = CBApp(args)
    retcode = app.execute()

    log.CB_INFO('cbgraph %s finished with code %s - %s' % (args.command, retcode, system.now()))
    return retcode


if __name__ == '__main__':
    sys.exit(main())
