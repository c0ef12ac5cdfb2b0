import traceback

from cbgraph import log
from cbgraph import system
from cbgraph.arghelpers import args_to_dict

from stages.dataset import CBLoadGraphStage
from stages.generate import CBGenerateStage
from stages.recognize import CBCheckStage, CBConditionsStage, CBSubstructuresStage, CBTrianglesStage
from stages.combing import CBCombStage, CBFellowStage, CBFftpStage
from stages.dismantle import CBDismantleStage, CBCoreStage, CBStabilizeStage
from stages.helly import CBHellyStage
from stages.cover import CBCoverStage
from stages.corpus import CBCorpusStage
from stages.report import CBReportStage

command_stages = {
    'check': CBCheckStage,
    'conditions': CBConditionsStage,
    'substructures': CBSubstructuresStage,
    'triangles': CBTrianglesStage,
    'comb': CBCombStage,
    'fellow': CBFellowStage,
    'fftp': CBFftpStage,
    'dismantle': CBDismantleStage,
    'core': CBCoreStage,
    'stabilize': CBStabilizeStage,
    'helly': CBHellyStage,
    'cover': CBCoverStage,
}

# commands whose extra operands are vertices
vertex_commands = ('triangles', 'comb', 'fftp', 'helly')


class CBApp:
    def __init__(self, args):
        """
        Initializes the application and defines the stage pipeline of the
        requested command
        """
        self.args = args
        log.logger.quiet = args.quiet
        if args.log_json:
            log.logger.init_json_output(args.log_json, args_to_dict(args))

        report = CBReportStage('report', args)

        if args.command == 'gen':
            self.first_stage = CBGenerateStage('gen', args)
        elif args.command == 'corpus':
            self.first_stage = CBCorpusStage('corpus', args)
        else:
            self.first_stage = CBLoadGraphStage('load', args,
                                                vertex_operands=args.command in vertex_commands)
            self.first_stage.connect(command_stages[args.command](args.command, args))

        self.first_stage.last_stage().connect(report)

    def execute(self):
        """:return 0 when the property holds, 1 when it fails, 2 on bad input"""
        try:
            outputs = self.first_stage.run()
            code = outputs['report'].exit_code()
            log.logger.log_json_success(code)
            return code
        except system.CBGraphError as e:
            log.CB_ERROR("%s: %s" % (type(e).__name__, str(e)))
            log.logger.log_json_stage_error(str(e), e.exit_code, traceback.format_exc())
            return e.exit_code
        except system.ExitException as e:
            log.CB_ERROR(str(e))
            log.logger.log_json_stage_error(str(e), 2, traceback.format_exc())
            return 2
        except Exception as e:
            log.logger.log_json_stage_error(str(e), 1, traceback.format_exc())
            raise e
        finally:
            log.logger.close()
