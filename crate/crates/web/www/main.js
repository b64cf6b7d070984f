import init, { graphView, covectorView, classifyReport } from "./pkg/sgtopo_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number.parseInt($(id).value, 10);

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
  "#bcbd22", "#7f7f7f", "#393b79", "#637939"];

function show(out, f) {
  out.classList.remove("error");
  try {
    out.textContent = f();
  } catch (e) {
    out.classList.add("error");
    out.textContent = String(e.message ?? e);
  }
}

function drawGraph(view) {
  const canvas = $("g-canvas");
  const ctx = canvas.getContext("2d");
  const r = canvas.width / 2 - 24;
  const c = canvas.width / 2;
  const at = (v) => [c + r * v.x, c - r * v.y];
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = "#eee";
  ctx.beginPath();
  ctx.arc(c, c, r, 0, 2 * Math.PI);
  ctx.stroke();
  ctx.strokeStyle = "rgba(80, 80, 80, 0.25)";
  for (const [a, b] of view.edges) {
    const [x0, y0] = at(view.vertices[a]);
    const [x1, y1] = at(view.vertices[b]);
    ctx.beginPath();
    ctx.moveTo(x0, y0);
    ctx.lineTo(x1, y1);
    ctx.stroke();
  }
  const small = view.vertices.length <= 30;
  view.vertices.forEach((v, i) => {
    const [x, y] = at(v);
    ctx.fillStyle = view.colouring ? PALETTE[view.colouring[i] % PALETTE.length] : "#1f77b4";
    ctx.beginPath();
    ctx.arc(x, y, small ? 5 : 3, 0, 2 * Math.PI);
    ctx.fill();
    if (small) {
      ctx.fillStyle = "#333";
      ctx.font = "11px monospace";
      ctx.fillText(`{${v.members.join(",")}}`, x + 6, y - 6);
    }
  });
}

function renderGraph() {
  show($("g-out"), () => {
    const view = JSON.parse(graphView(num("g-n"), num("g-k")));
    drawGraph(view);
    return [
      `SG(${view.n},${view.k}) on Z_${view.m}`,
      `vertices        ${view.vertices.length}`,
      `edges           ${view.edges.length}`,
      `chromatic no.   ${view.chi ?? "(not computed above 40 vertices)"}`,
      `max |v(S)+v(T)| ${view.max_edge_defect.toFixed(6)}`,
    ].join("\n");
  });
}

function renderCovector() {
  show($("c-out"), () => {
    const v = JSON.parse(covectorView($("c-s").value, num("c-n"), num("c-k")));
    if (!v.is_covector) {
      return `${v.covector} is not a covector of C^{${2 * num("c-n") + num("c-k")},${num("c-k") + 1}}`;
    }
    const sets = (xs) => xs.map((s) => `{${s.join(",")}}`).join(" ") || "(none)";
    return [
      `covector        ${v.covector}`,
      `S_0             {${v.sides[0].join(",")}}`,
      `S_1             {${v.sides[1].join(",")}}`,
      `stable in S_0   ${sets(v.vertices[0])}`,
      `stable in S_1   ${sets(v.vertices[1])}`,
      `acted by sigma  ${v.sigma}`,
      `acted by rho    ${v.rho}`,
    ].join("\n");
  });
}

function renderClassify() {
  show($("k-out"), () => {
    const r = JSON.parse(classifyReport(num("k-n"), num("k-k"), num("k-d")));
    const lines = [
      `m = ${r.m}, ring ${r.ring_case}`,
      `w       = ${r.w}`,
      `w-bar   = ${r.wbar}`,
      `zero in degrees ${r.wbar_vanishing_degrees.join(", ") || "(none)"}`,
      `window  ${r.window ? `[${r.window[0]}, ${r.window[1]})` : "(none)"}`,
      `verdict ${r.verdict}`,
    ];
    if (r.certificate) lines.push(`reason  ${r.certificate}`);
    for (const c of r.caveats) lines.push(`caveat  ${c}`);
    return lines.join("\n");
  });
}

await init();
$("g-go").addEventListener("click", renderGraph);
$("c-go").addEventListener("click", renderCovector);
$("k-go").addEventListener("click", renderClassify);
renderGraph();
renderCovector();
renderClassify();
