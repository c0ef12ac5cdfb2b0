from cbgraph import log
from cbgraph import types
from cbgraph import combing
from cbgraph.arghelpers import rerun_command
from cbgraph.system import EmptyLevel, ExitException, PreconditionViolated
from cbgraph.types import format_value
from stages.dataset import original_ids


class CBCombStage(types.CB_Stage):
    """
    Clique-path between two vertices, or over every ordered pair when no
    vertices are given. --exhaustive also checks uniqueness among normal
    clique-paths by backtracking.
    """
    def process(self, args, outputs):
        d = outputs['d']
        report = outputs['report']
        operand = outputs['operand']
        vertices = outputs['vertices']
        ids = outputs['ids']

        def clique_names(path):
            return " -> ".join("{%s}" % ",".join(map(str, ids.sorted(c))) for c in path.cliques)

        def rerun(u, v):
            return rerun_command('comb', [operand] + original_ids(ids, [u, v]), {'exhaustive': args.exhaustive})

        def empty_level(e, u, v):
            return "Level %s between %s and %s is empty" % (e.level, ids(u), ids(v))

        if vertices:
            if len(vertices) != 2:
                raise ExitException("comb takes two vertices, got %s" % len(vertices))
            u, v = vertices
            try:
                path = combing.clique_path(d, u, v)
            except EmptyLevel as e:
                report.fail('clique_path', empty_level(e, u, v), rerun(u, v))
                return
            axioms = combing.is_normal(d, path)
            report.add('clique_path', clique_names(path))
            report.add('sizes', path.sizes())
            report.add('vertex_path', ids.many(combing.normal_vertex_path(d, u, v, args.seed)))
            for axiom in combing.NormalAxiomReport.AXIOMS:
                report.add('axiom.%s' % axiom, axioms.holds(axiom))
            report.conclude(axioms.holds())
            if args.exhaustive:
                found = combing.enumerate_normal_paths(d, u, v)
                report.add('normal_paths', len(found))
                report.conclude(found == [path])
            if report.verdict is False:
                report.fail('clique_path', clique_names(path), rerun(u, v))
            return

        pairs = 0
        for u in range(d.n):
            for v in range(d.n):
                pairs += 1
                try:
                    path = combing.clique_path(d, u, v)
                except EmptyLevel as e:
                    report.fail('clique_path', empty_level(e, u, v), rerun(u, v))
                    return
                axioms = combing.is_normal(d, path)
                if not axioms.holds():
                    report.fail('normal', "%s: %s" % (clique_names(path), axioms), rerun(u, v))
                    return
                if args.exhaustive and combing.enumerate_normal_paths(d, u, v) != [path]:
                    report.fail('unique', "%s-%s has another normal clique-path" % (ids(u), ids(v)), rerun(u, v))
                    return
        report.add('pairs', pairs)
        report.add('uniqueness_checked', args.exhaustive)
        report.conclude(True)


class CBFellowStage(types.CB_Stage):
    def process(self, args, outputs):
        d = outputs['d']
        report = outputs['report']
        operand = outputs['operand']

        if args.exhaustive:
            quadruples = combing.all_quadruples(d.n)
        else:
            quadruples = combing.sampled_quadruples(d.n, args.samples, args.seed)
        report.add('exhaustive', args.exhaustive)

        try:
            results = combing.fellow_traveler_report(d, quadruples, args.threads)
        except EmptyLevel as e:
            report.fail('clique_path', "level %s of a clique-path is empty" % e.level)
            return

        for name, bound in combing.FELLOW_BOUNDS:
            stats = results[name]
            report.add('%s.count' % name, stats.count)
            report.add('%s.max_ratio' % name, stats.max_ratio)
            report.add('%s.max_distance' % name, stats.max_distance)
            report.add('%s.bound' % name, bound)

        for k in (2, 3):
            report.add('almost_convexity.k%s' % k, combing.almost_convexity_constant(d, k))

        report.conclude(combing.fellow_bounds_hold(results))
        if report.verdict is False:
            ids = outputs['ids']
            general = results['general']
            if general.max_ratio > 7 and general.quadruple is not None:
                report.fail('general', "quadruple %s ratio %s" % (format_value(ids.many(general.quadruple)), format_value(general.max_ratio)),
                            rerun_command('comb', [operand] + original_ids(ids, general.quadruple[:2])))
            for name, bound in combing.FELLOW_BOUNDS[1:]:
                if results[name].max_distance > bound:
                    report.fail(name, "level distance %s exceeds %s" % (results[name].max_distance, bound))


class CBFftpStage(types.CB_Stage):
    """
    Shortens the walk given as vertex operands, or every non-geodesic
    walk up to --max-len, checking the 2-fellow traveler bound.
    """
    def process(self, args, outputs):
        d = outputs['d']
        report = outputs['report']
        operand = outputs['operand']
        walk = outputs['vertices']
        ids = outputs['ids']

        if walk:
            shorter = combing.fftp_shorten(d, walk)
            k = combing.async_fellow_K(d, walk, shorter)
            report.add('path', ids.many(walk))
            report.add('shorter', ids.many(shorter))
            report.add('async_fellow_K', k)
            report.conclude(len(shorter) < len(walk) and k <= 2)
            if report.verdict is False:
                report.fail('fftp', "%s -> %s (K=%s)" % (format_value(ids.many(walk)), format_value(ids.many(shorter)), k),
                            rerun_command('fftp', [operand] + original_ids(ids, walk)))
            return

        scanned = 0
        worst = 0
        for p in combing.non_geodesic_paths(d, args.max_len):
            scanned += 1
            try:
                shorter = combing.fftp_shorten(d, p)
            except PreconditionViolated as e:
                report.fail('fftp', "%s: %s" % (format_value(ids.many(p)), e),
                            rerun_command('fftp', [operand] + original_ids(ids, p)))
                break
            k = combing.async_fellow_K(d, p, shorter)
            worst = max(worst, k)
            if len(shorter) >= len(p) or k > 2:
                report.fail('fftp', "%s -> %s (K=%s)" % (format_value(ids.many(p)), format_value(ids.many(shorter)), k),
                            rerun_command('fftp', [operand] + original_ids(ids, p)))
                break
        log.CB_INFO("Shortened %s non-geodesic walks" % scanned)
        report.add('max_len', args.max_len)
        report.add('walks', scanned)
        report.add('max_async_fellow_K', worst)
        report.conclude(True)
