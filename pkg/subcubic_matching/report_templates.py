import jinja2

from .errors import ReportError

POINT_LIST_TEXT = """{% for point in points -%}
{{ point }}
{% endfor %}"""

HALFSPACE_LIST_TEXT = """Index | Half-space | Family
----- | ---------- | ------
{% for row in rows -%}
{{ row.index }} | {{ row.label }} | {{ row.family }}
{% endfor %}"""

MEMBERSHIP_TEXT = """{{ verdict }}"""

POINT_IN_P_TEXT = """{{ point }} in P: {% if inside %}yes{% else %}no{% endif %}"""

BOUND_REPORT_TEXT = """{{ graph }} {{ bound }} nu={{ nu }} rhs={{ rhs }} \
slack={{ slack }} ({{ slack_display }})\
{% if tight %} tight{% endif %}{% if violation %} VIOLATED{% endif %}"""

FAMILY_STATS_TEXT = """family={{ spec }}
vertices={{ vertex_count }}
n3={{ profile.n3 }}
n2={{ profile.n2 }}
n1={{ profile.n1 }}
c={{ profile.c }}
nu={{ nu }}
{% if certified_nu is not none -%}
certified_nu={{ certified_nu }} {% if certified_nu == nu %}(matches){% else %}(MISMATCH){% endif %}
{%- else -%}
certified_nu=none (closed form extrapolated beyond {{ certify_limit }} vertices)
{%- endif %}"""

COUNTEREXAMPLE_TEXT = """triple={{ triple }} k={{ k }}
violated={{ halfspace_index }} {{ halfspace }}
family={{ spec }}
vertices={{ vertex_count }}
graph6={{ graph6 }}
nu={{ nu }}
rhs={{ rhs }}
slack={{ slack }} ({{ slack_display }})
certified={% if certified %}yes (matching engine){% else %}no (closed forms){% endif %}"""

GE_REPORT_TEXT = """{{ graph }} A={{ a }},B={{ b }},C={{ c }} \
hypomatchable={{ yes_no(a_hypomatchable) }} \
perfect={{ yes_no(c_perfect) }} \
surplus={{ yes_no(b_surplus) }} \
all_true={{ yes_no(all_true) }}"""

THEOREM1_TEXT = """{{ graph }} nu={{ nu }} n={{ vertex_count }}
{% if cubic_report is not none -%}
cubic: rhs=4(n-1)/9={{ cubic_report.rhs }} slack={{ cubic_report.slack }}{% if cubic_report.tight %} tight{% endif %}
{% endif -%}
general: rhs=(n-1)/3={{ general_report.rhs }} slack={{ general_report.slack }}{% if general_report.tight %} tight{% endif %}
b2/b5 mix: rhs={{ combined_report.rhs }} slack={{ combined_report.slack }}"""


def yes_no(value):
    return "yes" if value else "no"


def render_text(template_string, **kwargs):
    """
    Renders one of the text templates.  Every variable the template uses
    must be supplied.
    """
    try:
        template = jinja2.Template(template_string,
                                   autoescape=False,
                                   undefined=jinja2.StrictUndefined)
        return template.render(yes_no=yes_no, **kwargs).rstrip("\n")
    except jinja2.UndefinedError as e:
        raise ReportError("Report template variable %s" % e.message)
